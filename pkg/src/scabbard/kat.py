"""Known-answer-test files: deterministic generation, parsing, verification.

Record i of a run derives all of its randomness from one SHAKE-128 squeeze
of master_seed || i (4-byte little endian), read in fixed order as
seed_a(32) || seed_s(32) || z(32) || m(32). Files are hex text so they
diff cleanly and carry the version line "# scabbard-kat v1 <scheme> <level>".
"""

import struct
from dataclasses import dataclass

from . import kem
from .params import SchemeParams, params_by_name
from .symmetric import XofStream

HEADER_PREFIX = "# scabbard-kat v1"
FIELDS = ("count", "seed", "pk", "sk", "ct", "ss")


@dataclass(frozen=True)
class KatRecord:
    count: int
    seed: bytes     # seed_a || seed_s || z || m, 128 bytes
    pk: bytes
    sk: bytes
    ct: bytes
    ss: bytes


class KatMismatch(Exception):
    def __init__(self, count: int, field: str):
        self.count = count
        self.field = field
        super().__init__(f"record {count}: field '{field}' does not match")


def record_seeds(master_seed: bytes, index: int) -> bytes:
    if len(master_seed) != 32:
        raise ValueError("master seed must be 32 bytes")
    return XofStream(master_seed + struct.pack("<I", index)).read(128)


def generate_record(p: SchemeParams, master_seed: bytes, index: int) -> KatRecord:
    seed = record_seeds(master_seed, index)
    seed_a, seed_s, z, m = (seed[k:k + 32] for k in range(0, 128, 32))
    pair = kem.kem_keygen(p, seed_a, seed_s, z)
    ct, ss = kem.kem_encaps(p, pair.pk, m)
    if kem.kem_decaps(p, pair.sk, ct) != ss:
        raise AssertionError(f"decapsulation self-check failed on record {index}")
    return KatRecord(count=index, seed=seed, pk=pair.pk, sk=pair.sk, ct=ct, ss=ss)


def generate(p: SchemeParams, master_seed: bytes, count: int) -> list[KatRecord]:
    return [generate_record(p, master_seed, i) for i in range(count)]


def format_file(p: SchemeParams, records: list[KatRecord]) -> str:
    lines = [f"{HEADER_PREFIX} {p.scheme_id.scheme.value} {p.scheme_id.level.value}", ""]
    for rec in records:
        lines.append(f"count = {rec.count}")
        for field in FIELDS[1:]:
            lines.append(f"{field} = {getattr(rec, field).hex().upper()}")
        lines.append("")
    return "\n".join(lines)


def parse_file(text: str) -> tuple[SchemeParams, list[KatRecord]]:
    lines = text.splitlines()
    if not lines or not lines[0].startswith(HEADER_PREFIX):
        raise ValueError("missing KAT header line")
    _, _, scheme, level = lines[0].rsplit(" ", 3)
    p = params_by_name(scheme, level)
    records = []
    current: dict[str, object] = {}
    for line in lines[1:]:
        line = line.strip()
        if not line:
            if current:
                records.append(KatRecord(**current))
                current = {}
            continue
        key, _, value = line.partition(" = ")
        if key == "count":
            current["count"] = int(value)
        elif key in FIELDS:
            current[key] = bytes.fromhex(value)
        else:
            raise ValueError(f"unknown KAT field {key!r}")
    if current:
        records.append(KatRecord(**current))
    return p, records


def verify(text: str, master_seed: bytes) -> int:
    """Regenerate every record and compare field by field.

    Returns the number of verified records; raises KatMismatch naming the
    first divergent field.
    """
    p, records = parse_file(text)
    for rec in records:
        fresh = generate_record(p, master_seed, rec.count)
        for field in FIELDS[1:]:
            if getattr(fresh, field) != getattr(rec, field):
                raise KatMismatch(rec.count, field)
    return len(records)
