from __future__ import annotations

import json
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Union

from src.schemas import VerificationReport


class StepStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INFO = "INFO"


class VerificationLogger:
    """
    JSONL record of one verification run: a FAIL line per counterexample,
    then one summary line carrying the verdict.
    """

    def __init__(self, run_id: str, output_dir: Union[Path, str]) -> None:
        self.run_id = run_id
        self.log_path = Path(output_dir) / f"{run_id}.jsonl"
        self.log_path.parent.mkdir(parents=True, exist_ok=True)
        self._handle = self.log_path.open("a", encoding="utf-8")
        self.failures = 0

    def log_step(self, step_name: str, status: StepStatus, details: Optional[Dict[str, Any]] = None) -> None:
        record = {
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "run_id": self.run_id,
            "step_name": step_name,
            "status": StepStatus(status).value,
            "details": details or {},
        }
        if record["status"] == StepStatus.FAIL.value:
            self.failures += 1
        self._handle.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
        self._handle.flush()

    def counterexample(self, detail: str, permutation: Optional[str] = None) -> None:
        """A per-permutation failure, or an aggregate one when ``permutation`` is None."""
        if permutation is None:
            self.log_step("totals", StepStatus.FAIL, {"detail": detail})
        else:
            self.log_step("check", StepStatus.FAIL, {"permutation": permutation, "detail": detail})

    def summary(self, report: VerificationReport, duration_seconds: float) -> None:
        details = dict(report.payload())
        details.pop("passed")
        details["counterexamples"] = len(report.counterexamples)
        details["duration_seconds"] = round(duration_seconds, 3)
        self.log_step("summary", StepStatus.PASS if report.passed else StepStatus.FAIL, details)

    def close(self) -> None:
        if not self._handle.closed:
            self._handle.close()

    def __enter__(self) -> "VerificationLogger":
        return self

    def __exit__(self, *exc_info: object) -> None:
        self.close()


def _lines(path: Path) -> Iterator[Dict[str, Any]]:
    with path.open("r", encoding="utf-8") as handle:
        for raw in handle:
            if not raw.strip():
                continue
            try:
                yield json.loads(raw)
            except json.JSONDecodeError:
                continue


def read_steps(path: Path, status: Optional[StepStatus] = None) -> List[Dict[str, Any]]:
    """Load a run log, optionally keeping one status. Missing files and broken lines yield nothing."""
    if not path.exists():
        return []
    wanted = StepStatus(status).value if status is not None else None
    return [step for step in _lines(path) if wanted is None or step.get("status") == wanted]
