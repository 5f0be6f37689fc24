"""SQLAlchemy store for verification run history.

Tables:
- verification_runs: one row per command run (status, counts, timing)
- verification_results: one row per check inside a run
"""

import json
import logging
from contextlib import contextmanager
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Generator, List, Optional

from sqlalchemy import Boolean, Column, DateTime, Float, ForeignKey, Integer, String, Text, create_engine, select
from sqlalchemy.orm import Session, declarative_base, relationship, sessionmaker

from .reporter import RunReport

logger = logging.getLogger("corequot")

Base = declarative_base()


class VerificationRun(Base):
    """One recorded command run."""

    __tablename__ = "verification_runs"

    id = Column(Integer, primary_key=True, autoincrement=True)
    command = Column(String, nullable=False, index=True)
    parameters_json = Column(Text, nullable=True)
    status = Column(String, nullable=False)
    total = Column(Integer, default=0)
    passed = Column(Integer, default=0)
    failed = Column(Integer, default=0)
    duration_ms = Column(Float, default=0.0)
    created_at = Column(DateTime, default=datetime.utcnow, nullable=False)

    results = relationship("VerificationResult", back_populates="run", cascade="all, delete-orphan")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "command": self.command,
            "parameters": json.loads(self.parameters_json) if self.parameters_json else {},
            "status": self.status,
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "duration_ms": self.duration_ms,
            "created_at": self.created_at.strftime("%Y-%m-%d %H:%M:%S"),
        }


class VerificationResult(Base):
    """A single check of a run, e.g. one partition's coefficient comparison."""

    __tablename__ = "verification_results"

    id = Column(Integer, primary_key=True, autoincrement=True)
    run_id = Column(Integer, ForeignKey("verification_runs.id"), nullable=False, index=True)
    subject = Column(String, nullable=False)
    passed = Column(Boolean, nullable=False)
    payload_json = Column(Text, nullable=True)

    run = relationship("VerificationRun", back_populates="results")


def _subject_of(check: Dict[str, Any]) -> str:
    for key in ("subject", "weight", "degree", "relation", "commutator", "line"):
        if key in check:
            return str(check[key])
    return ""


class RunStore:
    """Run-history database; use as a context manager."""

    def __init__(self, path: str):
        self.path = Path(path)
        self.engine = None
        self._sessions = None

    def __enter__(self) -> "RunStore":
        self.connect()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()

    def connect(self):
        if self.path.parent and not self.path.parent.exists():
            self.path.parent.mkdir(parents=True, exist_ok=True)
        self.engine = create_engine(
            f"sqlite:///{self.path}", connect_args={"check_same_thread": False}, echo=False
        )
        Base.metadata.create_all(bind=self.engine)
        self._sessions = sessionmaker(autocommit=False, autoflush=False, bind=self.engine)
        logger.debug(f"Opened run store at {self.path}")

    def close(self):
        if self.engine is not None:
            self.engine.dispose()
            self.engine = None

    @contextmanager
    def session(self) -> Generator[Session, None, None]:
        """Commit on success, roll back on error, always close."""
        if self._sessions is None:
            self.connect()
        db = self._sessions()
        try:
            yield db
            db.commit()
        except Exception:
            db.rollback()
            raise
        finally:
            db.close()

    def record(self, report: RunReport) -> int:
        """Store a report and its checks; returns the run id"""
        total, passed, failed = report.counts()
        with self.session() as db:
            run = VerificationRun(
                command=report.command,
                parameters_json=json.dumps(report.parameters, sort_keys=True) if report.parameters else None,
                status=report.status.value,
                total=total,
                passed=passed,
                failed=failed,
                duration_ms=report.timing_ms,
            )
            for check in report.checks:
                run.results.append(
                    VerificationResult(
                        subject=_subject_of(check),
                        passed=bool(check.get("passed")),
                        payload_json=json.dumps(check, ensure_ascii=False),
                    )
                )
            db.add(run)
            db.flush()
            run_id = run.id
        logger.info(f"Recorded run {run_id}: {report.command} {report.status.value} ({passed}/{total})")
        return run_id

    def recent_runs(self, limit: int = 20, command: Optional[str] = None) -> List[Dict[str, Any]]:
        """Most recent runs first, optionally only those of one command"""
        with self.session() as db:
            query = select(VerificationRun)
            if command:
                query = query.where(VerificationRun.command == command)
            query = query.order_by(VerificationRun.id.desc()).limit(limit)
            return [run.to_dict() for run in db.scalars(query)]

    def results_for(self, run_id: int) -> List[Dict[str, Any]]:
        with self.session() as db:
            query = select(VerificationResult).where(VerificationResult.run_id == run_id).order_by(VerificationResult.id)
            return [
                {"subject": r.subject, "passed": r.passed, "payload": json.loads(r.payload_json or "{}")}
                for r in db.scalars(query)
            ]
