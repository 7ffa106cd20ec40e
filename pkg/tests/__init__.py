"""Test suite package for the QA automation tool."""
