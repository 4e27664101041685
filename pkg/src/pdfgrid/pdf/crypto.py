"""Standard security handler, RC4 variants only.

Supports V1/V2 encryption with revision 2 or 3 key derivation, which
covers 40-bit and 128-bit RC4 documents.  AES documents (V4/V5) raise
UnsupportedEncryption rather than silently producing garbage.
"""

from __future__ import annotations

import struct
from hashlib import md5

from ..errors import EncryptionError, UnsupportedEncryption

_PAD = bytes(
    [
        0x28, 0xBF, 0x4E, 0x5E, 0x4E, 0x75, 0x8A, 0x41,
        0x64, 0x00, 0x4E, 0x56, 0xFF, 0xFA, 0x01, 0x08,
        0x2E, 0x2E, 0x00, 0xB6, 0xD0, 0x68, 0x3E, 0x80,
        0x2F, 0x0C, 0xA9, 0xFE, 0x64, 0x53, 0x69, 0x7A,
    ]
)


def rc4(key: bytes, data: bytes) -> bytes:
    s = list(range(256))
    j = 0
    klen = len(key)
    for i in range(256):
        j = (j + s[i] + key[i % klen]) & 0xFF
        s[i], s[j] = s[j], s[i]
    out = bytearray(len(data))
    i = j = 0
    for idx, byte in enumerate(data):
        i = (i + 1) & 0xFF
        j = (j + s[i]) & 0xFF
        s[i], s[j] = s[j], s[i]
        out[idx] = byte ^ s[(s[i] + s[j]) & 0xFF]
    return bytes(out)


def _pad_password(password: bytes) -> bytes:
    return (password + _PAD)[:32]


class StandardDecryptor:
    """Authenticates a password and decrypts strings and streams."""

    def __init__(self, enc: dict, first_id: bytes, password: str | None):
        if enc.get("Filter") != "Standard":
            raise UnsupportedEncryption(
                f"security handler /{enc.get('Filter')} is not supported"
            )
        v = int(enc.get("V", 0))
        r = int(enc.get("R", 2))
        if v not in (1, 2) or r not in (2, 3):
            raise UnsupportedEncryption(
                f"encryption V={v} R={r} is not supported (RC4 V1/V2 only)"
            )
        self.r = r
        length = int(enc.get("Length", 40))
        self.n = 5 if v == 1 else max(5, min(16, length // 8))
        o_entry = enc.get("O")
        u_entry = enc.get("U")
        if not isinstance(o_entry, bytes) or not isinstance(u_entry, bytes):
            raise EncryptionError("encryption dictionary missing O or U entries")
        self.o = o_entry[:32].ljust(32, b"\0")
        self.u = u_entry[:32].ljust(32, b"\0")
        self.p = int(enc.get("P", -1))
        self.doc_id = first_id
        pw_bytes = (password or "").encode("latin-1", "replace")
        key = self._try_user_password(pw_bytes)
        if key is None:
            key = self._try_owner_password(pw_bytes)
        if key is None:
            raise EncryptionError(
                "document is encrypted and the password is missing or incorrect"
            )
        self.key = key

    def _compute_key(self, padded_pw: bytes) -> bytes:
        h = md5(padded_pw)
        h.update(self.o)
        h.update(struct.pack("<i", self.p))
        h.update(self.doc_id)
        digest = h.digest()
        if self.r >= 3:
            for _ in range(50):
                digest = md5(digest[: self.n]).digest()
        return digest[: self.n]

    def _user_u_value(self, key: bytes) -> bytes:
        if self.r == 2:
            return rc4(key, _PAD)
        digest = md5(_PAD + self.doc_id).digest()
        out = rc4(key, digest)
        for i in range(1, 20):
            step_key = bytes(b ^ i for b in key)
            out = rc4(step_key, out)
        return out

    def _check_padded(self, padded_pw: bytes) -> bytes | None:
        key = self._compute_key(padded_pw)
        expected = self._user_u_value(key)
        if self.r == 2:
            ok = expected == self.u
        else:
            ok = expected[:16] == self.u[:16]
        return key if ok else None

    def _try_user_password(self, pw: bytes) -> bytes | None:
        return self._check_padded(_pad_password(pw))

    def _try_owner_password(self, pw: bytes) -> bytes | None:
        digest = md5(_pad_password(pw)).digest()
        if self.r >= 3:
            for _ in range(50):
                digest = md5(digest).digest()
        okey = digest[: self.n]
        # decrypting O recovers the padded user password directly
        if self.r == 2:
            user_padded = rc4(okey, self.o)
        else:
            user_padded = self.o
            for i in range(19, -1, -1):
                step_key = bytes(b ^ i for b in okey)
                user_padded = rc4(step_key, user_padded)
        return self._check_padded(user_padded[:32])

    def decrypt(self, data: bytes, num: int, gen: int) -> bytes:
        h = md5(self.key)
        h.update(struct.pack("<i", num)[:3])
        h.update(struct.pack("<i", gen)[:2])
        obj_key = h.digest()[: min(self.n + 5, 16)]
        return rc4(obj_key, data)
