"""Hash/XOF contract tests.

Includes a small self-contained Keccak-f[1600] sponge so the SHA3/SHAKE
outputs are checked against an implementation that shares nothing with the
package (or with hashlib).
"""

import pytest

from scabbard.symmetric import XofStream, hash_g, hash_h, kdf

# ---------------------------------------------------------------------------
# reference sponge

_RC = [
    0x0000000000000001, 0x0000000000008082, 0x800000000000808A,
    0x8000000080008000, 0x000000000000808B, 0x0000000080000001,
    0x8000000080008081, 0x8000000000008009, 0x000000000000008A,
    0x0000000000000088, 0x0000000080008009, 0x000000008000000A,
    0x000000008000808B, 0x800000000000008B, 0x8000000000008089,
    0x8000000000008003, 0x8000000000008002, 0x8000000000000080,
    0x000000000000800A, 0x800000008000000A, 0x8000000080008081,
    0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
]
_ROT = [[0, 36, 3, 41, 18], [1, 44, 10, 45, 2], [62, 6, 43, 15, 61],
        [28, 55, 25, 21, 56], [27, 20, 39, 8, 14]]
_M64 = (1 << 64) - 1


def _rol(v, s):
    return ((v << s) | (v >> (64 - s))) & _M64


def _keccak_f(a):
    for rc in _RC:
        c = [a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20] for x in range(5)]
        d = [c[(x - 1) % 5] ^ _rol(c[(x + 1) % 5], 1) for x in range(5)]
        a = [a[x + 5 * y] ^ d[x] for y in range(5) for x in range(5)]
        b = [0] * 25
        for x in range(5):
            for y in range(5):
                b[y + 5 * ((2 * x + 3 * y) % 5)] = _rol(a[x + 5 * y], _ROT[x][y])
        a = [b[x + 5 * y] ^ (~b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y])
             for y in range(5) for x in range(5)]
        a[0] ^= rc
    return a


def _sponge(data, rate, domain, outlen):
    msg = bytearray(data)
    msg.append(domain)
    while len(msg) % rate:
        msg.append(0)
    msg[-1] ^= 0x80
    state = [0] * 25
    for off in range(0, len(msg), rate):
        block = msg[off:off + rate] + bytes(200 - rate)
        for i in range(25):
            state[i] ^= int.from_bytes(block[8 * i:8 * i + 8], "little")
        state = _keccak_f(state)
    out = b""
    while len(out) < outlen:
        squeezed = b"".join(lane.to_bytes(8, "little") for lane in state)
        out += squeezed[:rate]
        if len(out) < outlen:
            state = _keccak_f(state)
    return bytes(out[:outlen])


def ref_sha3_256(data):
    return _sponge(data, 136, 0x06, 32)


def ref_sha3_512(data):
    return _sponge(data, 72, 0x06, 64)


def ref_shake128(data, outlen):
    return _sponge(data, 168, 0x1F, outlen)


# ---------------------------------------------------------------------------


def test_reference_sponge_matches_published_empty_digests():
    assert ref_sha3_256(b"").hex() == (
        "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a")
    assert ref_sha3_512(b"").hex() == (
        "a69f73cca23a9ac5c8b567dc185a756e97c982164fe25859e0d1dcc1475c80a6"
        "15b2123af1f5f94c11e3e9402c3ac558f500199d95b6d3e301758586281dcd26")
    assert ref_shake128(b"", 32).hex() == (
        "7f9c2ba4e88f827d616045507605853ed73b8093f6efbc88eb1a6eacfa66ef26")


def test_hash_h_and_g_against_reference():
    for msg in (b"", b"\x00" * 32, b"scabbard", bytes(range(200))):
        assert hash_h(msg) == ref_sha3_256(msg)
        assert hash_g(msg) == ref_sha3_512(msg)
    assert len(hash_h(b"x")) == 32
    assert len(hash_g(b"x")) == 64


def test_xof_matches_reference_on_zero_seed():
    seed = bytes(32)
    assert XofStream(seed).read(64) == ref_shake128(seed, 64)


def test_xof_stream_consistency():
    seed = b"\x17" * 32
    s1 = XofStream(seed)
    s2 = XofStream(seed)
    assert s1.read(16) + s1.read(16) == s2.read(32)
    # many small reads against one large read
    s3 = XofStream(seed)
    chunks = b"".join(s3.read(k) for k in (1, 2, 3, 5, 8, 13, 100))
    assert chunks == XofStream(seed).read(132)
    assert s3.position == 132


def test_distinct_seeds_diverge():
    a = XofStream(bytes(32)).read(32)
    b = XofStream(b"\x01" + bytes(31)).read(32)
    assert a != b


def test_kdf_contract():
    a, b = b"\xaa" * 32, b"\xbb" * 32
    assert kdf(a, b) == kdf(a, b)
    assert kdf(a, b) != kdf(b, a)
    assert len(kdf(a, b)) == 32
    assert kdf(a, b) == ref_sha3_256(a + b)
    with pytest.raises(ValueError):
        kdf(b"short", b)


def test_g_split_recombines():
    digest = hash_g(b"payload")
    assert digest[:32] + digest[32:] == digest
    assert len(digest[:32]) == len(digest[32:]) == 32
