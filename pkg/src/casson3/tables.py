"""Embedded expected values for the verification harness.

The data file ``data/expected_values.json`` holds two record sets:

* ``brieskorn_families``: rows (p, q, m, A, B, C) meaning
  tau(Sigma(p,q, pq*n + m)) = A*n^2 + B*n + C for n >= 1, with the mirror
  family r = pq*n - m fitting A*n^2 - B*n + C;
* ``torus_knot_surgeries``: rows (p, q, A, B) meaning 1/n surgery on the
  (p,q) torus knot has invariant A*n^2 - B*n.

The records are transcription data, so they live in a versioned file with
a sha256 over the canonical payload; the loader refuses a file whose
checksum does not match (a corrupted transcription must fail loudly, not
verify vacuously).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources

DATA_PACKAGE = "casson3.data"
DATA_NAME = "expected_values.json"
_PAYLOAD_KEYS = ("brieskorn_families", "torus_knot_surgeries")


class ChecksumError(RuntimeError):
    """The expected-values file does not match its embedded sha256."""


@dataclass(frozen=True)
class FamilyRow:
    p: int
    q: int
    m: int
    A: int
    B: int
    C: int


@dataclass(frozen=True)
class SurgeryRow:
    p: int
    q: int
    A: int
    B: int


def _payload_digest(doc: dict) -> str:
    payload = {k: doc[k] for k in _PAYLOAD_KEYS}
    return hashlib.sha256(
        json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    ).hexdigest()


def load_expected(text: str | None = None) -> tuple[list[FamilyRow], list[SurgeryRow]]:
    """Load and checksum-verify the expected-values records.

    ``text`` overrides the packaged file (used to exercise the corruption
    path in tests).
    """
    if text is None:
        text = resources.files(DATA_PACKAGE).joinpath(DATA_NAME).read_text()
    doc = json.loads(text)
    for key in _PAYLOAD_KEYS + ("sha256",):
        if key not in doc:
            raise ChecksumError(f"expected-values file missing {key!r}")
    digest = _payload_digest(doc)
    if digest != doc["sha256"]:
        raise ChecksumError(
            f"expected-values checksum mismatch: file says {doc['sha256']}, "
            f"payload hashes to {digest}"
        )
    families = [FamilyRow(**row) for row in doc["brieskorn_families"]]
    surgeries = [SurgeryRow(**row) for row in doc["torus_knot_surgeries"]]
    return families, surgeries
