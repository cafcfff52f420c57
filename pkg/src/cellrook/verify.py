"""Exhaustive comparison of switching rook polynomials with h-polynomials.

For each shape the harness computes the switching rook polynomial and rook
number combinatorially, the h-polynomial from the degrevlex initial ideal,
and compares them.  Shapes whose weak components are convex are also run
through the dissection recursion as an independent second route to ``h``.
"""

from __future__ import annotations

import json
import logging
import multiprocessing
import os
import signal
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from . import convex, hilbert
from .algebra import groebner, satisfies_sharp_prime
from .enumeration import canonical_keys
from .grid import CellCollection, CodecError, format_collection, is_simple, parse, weak_components
from .hilbert import numerator_packed, series_from_numerator
from .polynomial import IntPolynomial, product
from .switch import switching_rook_polynomial

log = logging.getLogger(__name__)

DEFAULT_TIMEOUT = 60.0
RECORD_FIELDS = (
    "canonical_key", "rank", "kind", "switching", "h", "rook_number", "deg_h",
    "simple", "sharp", "sharp_prime", "match_poly", "match_reg", "elapsed_ms", "status",
)


class DatasetError(ValueError):
    pass


class ShapeTimeout(Exception):
    pass


@dataclass
class VerificationRecord:
    canonical_key: str
    rank: int
    kind: str
    switching: IntPolynomial
    h: IntPolynomial
    rook_number: int
    deg_h: int
    simple: bool
    sharp: bool
    sharp_prime: bool
    match_poly: bool
    match_reg: bool
    elapsed_ms: float
    # ok | timeout | engine_mismatch | factor_mismatch
    status: str = "ok"

    @property
    def is_counterexample(self) -> bool:
        if self.status == "timeout":
            return False
        return self.status != "ok" or not (self.match_poly and self.match_reg)

    def to_line(self) -> str:
        values = [
            self.canonical_key, str(self.rank), self.kind, self.switching.to_csv(),
            self.h.to_csv(), str(self.rook_number), str(self.deg_h),
            _flag(self.simple), _flag(self.sharp), _flag(self.sharp_prime),
            _flag(self.match_poly), _flag(self.match_reg), f"{self.elapsed_ms:.1f}", self.status,
        ]
        return "\t".join(values)

    @classmethod
    def from_line(cls, line: str) -> VerificationRecord:
        parts = line.rstrip("\n").split("\t")
        if len(parts) != len(RECORD_FIELDS):
            raise ValueError(f"expected {len(RECORD_FIELDS)} fields, got {len(parts)}")
        return cls(
            canonical_key=parts[0], rank=int(parts[1]), kind=parts[2],
            switching=IntPolynomial.from_csv(parts[3]), h=IntPolynomial.from_csv(parts[4]),
            rook_number=int(parts[5]), deg_h=int(parts[6]),
            simple=parts[7] == "1", sharp=parts[8] == "1", sharp_prime=parts[9] == "1",
            match_poly=parts[10] == "1", match_reg=parts[11] == "1",
            elapsed_ms=float(parts[12]), status=parts[13],
        )


def _flag(value: bool) -> str:
    return "1" if value else "0"


def _h_and_sharp(P: CellCollection) -> tuple[IntPolynomial, bool]:
    res = groebner(P, "rev")
    num = numerator_packed([lead for lead, _ in res.basis], res.ring.n)
    return series_from_numerator(num, res.ring.n).h_poly, res.is_generator_basis


def verify_shape(P: CellCollection, kind: str) -> VerificationRecord:
    """Compute both sides of the conjecture for one shape."""
    start = time.perf_counter()
    switching = switching_rook_polynomial(P)
    h, sharp = _h_and_sharp(P)
    record = VerificationRecord(
        canonical_key=format_collection(P.canonical()),
        rank=len(P),
        kind=kind,
        switching=switching,
        h=h,
        rook_number=switching.degree,
        deg_h=h.degree,
        simple=is_simple(P),
        sharp=sharp,
        sharp_prime=satisfies_sharp_prime(P),
        match_poly=switching == h,
        match_reg=switching.degree == h.degree,
        elapsed_ms=0.0,
    )
    comps = weak_components(P)
    if len(comps) > 1:
        h_parts = product([hilbert.h_polynomial(c).h_poly for c in comps])
        r_parts = product([switching_rook_polynomial(c) for c in comps])
        if h_parts != h or r_parts != switching:
            record.status = "factor_mismatch"
    if record.status == "ok" and convex.components_convex(P):
        rec = convex.recursive_h(P)
        if rec.certified and rec.h != h:
            record.status = "engine_mismatch"
    record.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return record


def _alarm(signum, frame):
    raise ShapeTimeout()


def _verify_key(args) -> str:
    key, kind, timeout = args
    P = CellCollection(key)
    use_alarm = timeout and threading.current_thread() is threading.main_thread()
    if use_alarm:
        previous = signal.signal(signal.SIGALRM, _alarm)
    start = time.perf_counter()
    try:
        # armed inside the try so a very short timeout cannot escape it
        if use_alarm:
            signal.setitimer(signal.ITIMER_REAL, timeout)
        return verify_shape(P, kind).to_line()
    except ShapeTimeout:
        elapsed = (time.perf_counter() - start) * 1000.0
        return VerificationRecord(
            format_collection(P.canonical()), len(P), kind, IntPolynomial(), IntPolynomial(),
            -1, -1, is_simple(P), False, False, False, False, elapsed, "timeout",
        ).to_line()
    finally:
        if use_alarm:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, previous)


@dataclass
class Summary:
    kind: str
    rank: int
    records: list[VerificationRecord] = field(default_factory=list)

    @property
    def counterexamples(self) -> list[VerificationRecord]:
        return [r for r in self.records if r.is_counterexample]

    @property
    def timeouts(self) -> list[VerificationRecord]:
        return [r for r in self.records if r.status == "timeout"]

    @property
    def verified(self) -> int:
        return sum(1 for r in self.records if r.status == "ok" and not r.is_counterexample)

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.timeouts

    def summary_line(self) -> str:
        bad = self.counterexamples
        return f"COUNTEREXAMPLES {len(bad)}" if bad else f"OK {self.verified}"


def _write_checkpoint(path: Path, kind: str, rank: int, done: int, lines: list[str]) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    state = {
        "kind": kind,
        "rank": rank,
        "next_index": done,
        "last_key": lines[-1].split("\t", 1)[0] if lines else None,
        "counterexamples": sum(VerificationRecord.from_line(l).is_counterexample for l in lines),
        "records": lines,
    }
    tmp.write_text(json.dumps(state))
    os.replace(tmp, path)


def _load_checkpoint(path: Path, kind: str, rank: int) -> list[str]:
    state = json.loads(Path(path).read_text())
    if state["kind"] != kind or state["rank"] != rank:
        raise ValueError(
            f"checkpoint is for {state['kind']} rank {state['rank']}, not {kind} rank {rank}"
        )
    lines = state["records"]
    if len(lines) != state["next_index"]:
        raise ValueError("corrupt checkpoint: record count does not match next_index")
    return lines


def test_conjecture(
    kind: str,
    rank: int,
    jobs: int = 1,
    *,
    shapes: Iterable[CellCollection] | None = None,
    timeout: float | None = DEFAULT_TIMEOUT,
    checkpoint: str | Path | None = None,
    resume: str | Path | None = None,
    checkpoint_every: int = 100,
) -> Summary:
    """Verify every shape of ``kind`` and ``rank`` (or the given ``shapes``).

    Records come back sorted by canonical key whatever the job count.  On
    interruption a checkpoint is written (when a path is configured) and the
    exception propagates; ``resume`` continues from such a checkpoint.
    """
    if rank < 0:
        raise ValueError("rank must be non-negative")
    if shapes is None:
        keys = list(canonical_keys(kind, rank))
    else:
        keys = sorted({P.canonical_key for P in shapes})
    lines: list[str] = _load_checkpoint(Path(resume), kind, rank) if resume else []
    todo = [(key, kind, timeout) for key in keys[len(lines):]]
    ckpt = Path(checkpoint) if checkpoint else (Path(resume) if resume else None)

    def results() -> Iterator[str]:
        if jobs <= 1:
            for item in todo:
                yield _verify_key(item)
            return
        chunk = max(1, len(todo) // (jobs * 16))
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            yield from pool.imap(_verify_key, todo, chunksize=chunk)

    try:
        for line in results():
            lines.append(line)
            if ckpt and len(lines) % checkpoint_every == 0:
                _write_checkpoint(ckpt, kind, rank, len(lines), lines)
    except BaseException:
        if ckpt:
            _write_checkpoint(ckpt, kind, rank, len(lines), lines)
            log.error("verification interrupted; checkpoint written to %s", ckpt)
        raise
    if ckpt:
        _write_checkpoint(ckpt, kind, rank, len(lines), lines)
    records = sorted((VerificationRecord.from_line(l) for l in lines), key=lambda r: r.canonical_key)
    return Summary(kind, rank, records)


# keep pytest from collecting the harness entry point as a test
test_conjecture.__test__ = False  # type: ignore[attr-defined]


def write_report(summary: Summary, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# " + "\t".join(RECORD_FIELDS) + "\n")
        for rec in summary.records:
            fh.write(rec.to_line() + "\n")
        if summary.timeouts:
            fh.write(f"TIMEOUTS {len(summary.timeouts)}\n")
        fh.write(summary.summary_line() + "\n")


def read_report(path: str | Path) -> list[VerificationRecord]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.startswith("#") or line.startswith(("OK ", "COUNTEREXAMPLES ", "TIMEOUTS ")):
                continue
            if line.strip():
                out.append(VerificationRecord.from_line(line))
    return out


def write_dataset(stream: Iterable[CellCollection], path: str | Path) -> int:
    """One brace-encoded collection per line; returns the number written."""
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        for P in stream:
            fh.write(format_collection(P) + "\n")
            n += 1
    return n


def read_dataset(path: str | Path) -> Iterator[CellCollection]:
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                yield parse(line.strip())
            except CodecError as exc:
                raise DatasetError(f"{path}:{lineno}: {exc}") from None
