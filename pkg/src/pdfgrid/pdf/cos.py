"""COS object model and document reader.

Implements the carrier syntax of PDF: the eight object types, classic and
stream cross-reference tables, object streams, and the trailer chain.  The
reader is deliberately forgiving: a damaged cross-reference table triggers
a full-file scan for `N G obj` headers, which recovers most real-world
breakage (truncated files, bad offsets, linearizer bugs).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import PdfSyntaxError
from .filters import decode_stream
from .standard14 import GLYPH_TO_UNICODE, PDFDOC_ENCODING

WHITESPACE = b"\x00\t\n\x0c\r "
DELIMITERS = b"()<>[]{}/%"
_END_KEYWORD = WHITESPACE + DELIMITERS

_NUM_RE = re.compile(rb"[+-]?(?:\d+\.?\d*|\.\d+)")


class Name(str):
    """A PDF name object; distinct from text strings for the writer."""

    __slots__ = ()

    def __repr__(self):
        return "/" + str.__str__(self)


@dataclass(frozen=True)
class Ref:
    """Indirect object reference `num gen R`."""

    num: int
    gen: int = 0


class Stream:
    """A stream object: its dictionary plus raw (still encoded) bytes."""

    def __init__(self, sdict: dict, raw: bytes, resolver=None):
        self.dict = sdict
        self.raw = raw
        self._resolver = resolver
        self._decoded: bytes | None = None

    def _resolve(self, obj):
        if self._resolver is not None:
            return self._resolver(obj)
        return obj

    def filters(self) -> tuple[list[str], list[dict | None]]:
        filt = self._resolve(self.dict.get("Filter"))
        if filt is None:
            return [], []
        if isinstance(filt, (Name, str)):
            filt = [filt]
        filt = [str(self._resolve(f)) for f in filt]
        parms = self._resolve(self.dict.get("DecodeParms"))
        if parms is None:
            parms = [None] * len(filt)
        elif isinstance(parms, dict):
            parms = [parms]
        parms = [self._resolve(p) for p in parms]
        parms += [None] * (len(filt) - len(parms))
        resolved = []
        for p in parms[: len(filt)]:
            if isinstance(p, dict):
                resolved.append({k: self._resolve(v) for k, v in p.items()})
            else:
                resolved.append(None)
        return filt, resolved

    def get_data(self) -> bytes:
        if self._decoded is None:
            filt, parms = self.filters()
            self._decoded = decode_stream(self.raw, filt, parms)
        return self._decoded

    def __repr__(self):
        return f"<Stream {self.dict!r} ({len(self.raw)} raw bytes)>"


class Lexer:
    """Tokenizer for COS syntax.

    Tokens are (kind, value) pairs where kind is one of: "num", "name",
    "str", "kw", "[", "]", "<<", ">>", "{", "}".
    """

    def __init__(self, data: bytes, pos: int = 0):
        self.data = data
        self.pos = pos
        self._pushed: list = []

    def push(self, token):
        self._pushed.append(token)

    def skip_ws(self):
        data, n = self.data, len(self.data)
        p = self.pos
        while p < n:
            c = data[p]
            if c in WHITESPACE:
                p += 1
            elif c == 0x25:  # % comment to end of line
                while p < n and data[p] not in b"\r\n":
                    p += 1
            else:
                break
        self.pos = p

    def next_token(self):
        if self._pushed:
            return self._pushed.pop()
        self.skip_ws()
        data, n = self.data, len(self.data)
        p = self.pos
        if p >= n:
            return None
        c = data[p]
        if c == 0x2F:  # /
            return self._lex_name()
        if c in b"+-.0123456789":
            m = _NUM_RE.match(data, p)
            if m:
                self.pos = m.end()
                text = m.group()
                if b"." in text:
                    return ("num", float(text))
                return ("num", int(text))
            self.pos = p + 1
            return ("kw", data[p : p + 1])
        if c == 0x28:  # (
            return self._lex_literal_string()
        if c == 0x3C:  # <
            if data[p : p + 2] == b"<<":
                self.pos = p + 2
                return ("<<", None)
            return self._lex_hex_string()
        if c == 0x3E:  # >
            if data[p : p + 2] == b">>":
                self.pos = p + 2
                return (">>", None)
            self.pos = p + 1
            return ("kw", b">")
        if c == 0x5B:
            self.pos = p + 1
            return ("[", None)
        if c == 0x5D:
            self.pos = p + 1
            return ("]", None)
        if c == 0x7B:
            self.pos = p + 1
            return ("{", None)
        if c == 0x7D:
            self.pos = p + 1
            return ("}", None)
        if c == 0x29:  # stray )
            self.pos = p + 1
            return ("kw", b")")
        # bare keyword
        q = p
        while q < n and data[q] not in _END_KEYWORD:
            q += 1
        self.pos = q if q > p else p + 1
        return ("kw", data[p : self.pos])

    def _lex_name(self) -> tuple:
        data, n = self.data, len(self.data)
        p = self.pos + 1
        out = bytearray()
        while p < n:
            c = data[p]
            if c in _END_KEYWORD:
                break
            if c == 0x23 and p + 2 < n:  # #xx escape
                try:
                    out.append(int(data[p + 1 : p + 3], 16))
                    p += 3
                    continue
                except ValueError:
                    pass
            out.append(c)
            p += 1
        self.pos = p
        return ("name", Name(out.decode("utf-8", "replace")))

    def _lex_literal_string(self) -> tuple:
        data, n = self.data, len(self.data)
        p = self.pos + 1
        out = bytearray()
        depth = 1
        while p < n:
            c = data[p]
            if c == 0x5C:  # backslash
                p += 1
                if p >= n:
                    break
                e = data[p]
                if e in b"nrtbf":
                    out.append({0x6E: 10, 0x72: 13, 0x74: 9, 0x62: 8, 0x66: 12}[e])
                    p += 1
                elif e in b"01234567":
                    oct_digits = bytearray()
                    while p < n and data[p] in b"01234567" and len(oct_digits) < 3:
                        oct_digits.append(data[p])
                        p += 1
                    out.append(int(oct_digits, 8) & 0xFF)
                elif e == 0x0D:  # line continuation
                    p += 1
                    if p < n and data[p] == 0x0A:
                        p += 1
                elif e == 0x0A:
                    p += 1
                else:
                    out.append(e)
                    p += 1
            elif c == 0x28:
                depth += 1
                out.append(c)
                p += 1
            elif c == 0x29:
                depth -= 1
                if depth == 0:
                    p += 1
                    break
                out.append(c)
                p += 1
            else:
                out.append(c)
                p += 1
        self.pos = p
        return ("str", bytes(out))

    def _lex_hex_string(self) -> tuple:
        data, n = self.data, len(self.data)
        p = self.pos + 1
        digits = bytearray()
        while p < n and data[p] != 0x3E:
            c = data[p]
            if c in b"0123456789abcdefABCDEF":
                digits.append(c)
            p += 1
        self.pos = min(p + 1, n)
        if len(digits) % 2:
            digits.append(0x30)
        return ("str", bytes.fromhex(digits.decode("ascii")))


_KEYWORD_VALUES = {b"true": True, b"false": False, b"null": None}

_MAX_DEPTH = 120


class Parser:
    """Builds COS objects from a Lexer, resolving `N G R` lookahead."""

    def __init__(self, data: bytes, pos: int = 0, resolver=None):
        self.lexer = Lexer(data, pos)
        self.resolver = resolver

    def parse_value(self, depth: int = 0):
        if depth > _MAX_DEPTH:
            raise PdfSyntaxError("object nesting too deep", self.lexer.pos)
        tok = self.lexer.next_token()
        if tok is None:
            raise PdfSyntaxError("unexpected end of data", self.lexer.pos)
        kind, value = tok
        if kind == "num":
            if isinstance(value, int) and value >= 0:
                return self._maybe_ref(value)
            return value
        if kind == "name":
            return value
        if kind == "str":
            return value
        if kind == "[":
            out = []
            while True:
                t = self.lexer.next_token()
                if t is None:
                    raise PdfSyntaxError("unterminated array", self.lexer.pos)
                if t[0] == "]":
                    return out
                self.lexer.push(t)
                out.append(self.parse_value(depth + 1))
        if kind == "<<":
            d = {}
            while True:
                t = self.lexer.next_token()
                if t is None:
                    raise PdfSyntaxError("unterminated dictionary", self.lexer.pos)
                if t[0] == ">>":
                    break
                if t[0] != "name":
                    # skip junk key and hope the rest lines up
                    continue
                d[str(t[1])] = self.parse_value(depth + 1)
            return self._maybe_stream(d)
        if kind == "kw":
            if value in _KEYWORD_VALUES:
                return _KEYWORD_VALUES[value]
            raise PdfSyntaxError(f"unexpected keyword {value!r}", self.lexer.pos)
        raise PdfSyntaxError(f"unexpected token {kind!r}", self.lexer.pos)

    def _maybe_ref(self, first: int):
        t2 = self.lexer.next_token()
        if t2 is not None and t2[0] == "num" and isinstance(t2[1], int) and t2[1] >= 0:
            t3 = self.lexer.next_token()
            if t3 is not None and t3[0] == "kw" and t3[1] == b"R":
                return Ref(first, t2[1])
            if t3 is not None:
                self.lexer.push(t3)
        if t2 is not None:
            self.lexer.push(t2)
        return first

    def _maybe_stream(self, d: dict):
        tok = self.lexer.next_token()
        if tok is None or tok != ("kw", b"stream"):
            if tok is not None:
                self.lexer.push(tok)
            return d
        data = self.lexer.data
        p = self.lexer.pos
        if data[p : p + 2] == b"\r\n":
            p += 2
        elif p < len(data) and data[p] in b"\r\n":
            p += 1
        length = d.get("Length")
        if self.resolver is not None:
            length = self.resolver(length)
        raw = None
        if isinstance(length, int) and length >= 0 and p + length <= len(data):
            candidate = data[p : p + length]
            tail = data[p + length : p + length + 20]
            if b"endstream" in tail or tail.lstrip(WHITESPACE)[:9] == b"endstream":
                raw = candidate
                endpos = p + length
        if raw is None:
            idx = data.find(b"endstream", p)
            if idx < 0:
                raise PdfSyntaxError("unterminated stream", p)
            endpos = idx
            raw = data[p:idx]
            # strip the EOL the writer placed before "endstream"
            if raw.endswith(b"\r\n"):
                raw = raw[:-2]
            elif raw.endswith(b"\n") or raw.endswith(b"\r"):
                raw = raw[:-1]
        idx = data.find(b"endstream", endpos)
        self.lexer.pos = (idx + 9) if idx >= 0 else endpos
        self.lexer._pushed.clear()
        return Stream(d, raw, self.resolver)

    def parse_indirect(self) -> tuple[int, int, object]:
        """Parse `N G obj <value> endobj` at the current position."""
        t1 = self.lexer.next_token()
        t2 = self.lexer.next_token()
        t3 = self.lexer.next_token()
        if (
            t1 is None
            or t2 is None
            or t3 is None
            or t1[0] != "num"
            or t2[0] != "num"
            or t3 != ("kw", b"obj")
        ):
            raise PdfSyntaxError("expected `N G obj`", self.lexer.pos)
        value = self.parse_value()
        tok = self.lexer.next_token()
        if tok is not None and tok != ("kw", b"endobj"):
            self.lexer.push(tok)
        return int(t1[1]), int(t2[1]), value


_OBJ_HEADER_RE = re.compile(rb"(?<![0-9])(\d{1,10})[\x00\t\n\x0c\r ]+(\d{1,5})[\x00\t\n\x0c\r ]+obj\b")


def decode_text_string(raw: bytes) -> str:
    """Decode a PDF text string (UTF-16 with BOM, else PDFDocEncoding)."""
    if raw.startswith(b"\xfe\xff"):
        return raw[2:].decode("utf-16-be", "replace")
    if raw.startswith(b"\xff\xfe"):
        return raw[2:].decode("utf-16-le", "replace")
    out = []
    for b in raw:
        glyph = PDFDOC_ENCODING[b] if b < len(PDFDOC_ENCODING) else None
        if glyph is None:
            out.append(chr(b))
        else:
            out.append(GLYPH_TO_UNICODE.get(glyph, chr(b)))
    return "".join(out)


@dataclass
class PageNode:
    """A leaf of the page tree with inherited attributes folded in.

    `resources_raw` keeps the possibly-indirect Resources value so a
    writer can share one copy between pages; `resources` is resolved.
    """

    ref: Ref | None
    obj: dict
    resources: dict
    resources_raw: object
    mediabox: tuple[float, float, float, float]
    rotate: int


_INHERITABLE = ("Resources", "MediaBox", "CropBox", "Rotate")

_LETTER = (0.0, 0.0, 612.0, 792.0)


class Document:
    """A parsed PDF file: cross-reference map, trailer, object accessors."""

    def __init__(self, data: bytes, password: str | None = None):
        idx = data.find(b"%PDF-", 0, 4096)
        if idx < 0:
            raise PdfSyntaxError("not a PDF: %PDF header missing")
        if idx > 0:
            data = data[idx:]
        self.data = data
        m = re.match(rb"%PDF-(\d+\.\d+)", data)
        self.version = m.group(1).decode("ascii") if m else "1.4"
        self.xref: dict[int, tuple] = {}
        self.trailer: dict = {}
        self._cache: dict[int, object] = {}
        self._objstm_cache: dict[int, dict[int, object]] = {}
        self._brute_xref: dict[int, tuple] | None = None
        self._decryptor = None
        self._encrypt_num: int | None = None
        try:
            self._load_xref_chain()
        except PdfSyntaxError:
            self._use_brute_xref()
        if "Root" not in self.trailer:
            self._use_brute_xref()
            self._find_root()
        self._setup_encryption(password)

    # -- object access -------------------------------------------------

    def resolve(self, obj):
        seen = set()
        while isinstance(obj, Ref):
            if obj.num in seen:
                return None
            seen.add(obj.num)
            obj = self.get_object(obj)
        return obj

    def get_object(self, ref: Ref):
        if ref.num in self._cache:
            return self._cache[ref.num]
        obj, encrypted = self._load_indirect(ref)
        if encrypted and self._decryptor is not None and ref.num != self._encrypt_num:
            obj = self._decrypt_object(obj, ref.num, ref.gen)
        self._cache[ref.num] = obj
        return obj

    def _load_indirect(self, ref: Ref):
        entry = self.xref.get(ref.num)
        if entry is None or entry[0] == "f":
            entry = self._brute_entry(ref.num)
        if entry is None:
            return None, False
        if entry[0] == "n":
            try:
                return self._parse_object_at(entry[1], ref.num), True
            except PdfSyntaxError:
                fallback = self._brute_entry(ref.num)
                if fallback is not None and fallback[1] != entry[1]:
                    return self._parse_object_at(fallback[1], ref.num), True
                raise
        if entry[0] == "o":
            return self._load_from_objstm(entry[1], entry[2], ref.num), False
        return None, False

    def _parse_object_at(self, offset: int, expected_num: int):
        if not 0 <= offset < len(self.data):
            raise PdfSyntaxError(f"object offset {offset} out of file")
        parser = Parser(self.data, offset, resolver=self.resolve)
        num, _gen, value = parser.parse_indirect()
        if num != expected_num:
            raise PdfSyntaxError(
                f"object number mismatch at offset {offset}: wanted {expected_num}, found {num}"
            )
        return value

    def _load_from_objstm(self, stm_num: int, index: int, want_num: int):
        members = self._objstm_cache.get(stm_num)
        if members is None:
            stream = self.resolve(Ref(stm_num, 0))
            if not isinstance(stream, Stream):
                raise PdfSyntaxError(f"object stream {stm_num} missing")
            data = stream.get_data()
            count = int(self.resolve(stream.dict.get("N", 0)))
            first = int(self.resolve(stream.dict.get("First", 0)))
            header = Lexer(data[:first])
            pairs = []
            for _ in range(count):
                t_num = header.next_token()
                t_off = header.next_token()
                if t_num is None or t_off is None or t_num[0] != "num" or t_off[0] != "num":
                    break
                pairs.append((int(t_num[1]), int(t_off[1])))
            members = {}
            for objnum, off in pairs:
                parser = Parser(data, first + off, resolver=self.resolve)
                try:
                    members[objnum] = parser.parse_value()
                except PdfSyntaxError:
                    members[objnum] = None
            self._objstm_cache[stm_num] = members
        if want_num in members:
            return members[want_num]
        return None

    # -- cross-reference loading ----------------------------------------

    def _find_startxref(self) -> int:
        tail_at = max(0, len(self.data) - 2048)
        idx = self.data.rfind(b"startxref", tail_at)
        if idx < 0:
            idx = self.data.rfind(b"startxref")
        if idx < 0:
            raise PdfSyntaxError("startxref not found")
        m = _NUM_RE.search(self.data, idx + 9)
        if m is None:
            raise PdfSyntaxError("startxref value missing", idx)
        return int(m.group())

    def _load_xref_chain(self):
        queue = [self._find_startxref()]
        seen = set()
        while queue:
            offset = queue.pop(0)
            if offset in seen:
                continue
            seen.add(offset)
            if not 0 <= offset < len(self.data):
                raise PdfSyntaxError(f"xref offset {offset} out of file")
            trailer = self._load_xref_section(offset)
            for key, value in trailer.items():
                self.trailer.setdefault(key, value)
            follow = []
            hybrid = trailer.get("XRefStm")
            if isinstance(hybrid, int):
                follow.append(hybrid)
            prev = trailer.get("Prev")
            if isinstance(prev, (int, float)):
                follow.append(int(prev))
            queue[:0] = follow

    def _load_xref_section(self, offset: int) -> dict:
        lexer = Lexer(self.data, offset)
        tok = lexer.next_token()
        if tok == ("kw", b"xref"):
            return self._load_xref_table(lexer)
        # otherwise this must be an xref stream object
        parser = Parser(self.data, offset, resolver=self.resolve)
        _num, _gen, value = parser.parse_indirect()
        if not isinstance(value, Stream):
            raise PdfSyntaxError(f"no xref table or stream at offset {offset}")
        self._load_xref_stream(value)
        return dict(value.dict)

    def _load_xref_table(self, lexer: Lexer) -> dict:
        tok = lexer.next_token()
        while tok is not None and tok[0] == "num":
            start = int(tok[1])
            tok_count = lexer.next_token()
            if tok_count is None or tok_count[0] != "num":
                raise PdfSyntaxError("bad xref subsection header", lexer.pos)
            count = int(tok_count[1])
            for i in range(count):
                t_a = lexer.next_token()
                t_b = lexer.next_token()
                t_c = lexer.next_token()
                if t_a is None or t_b is None or t_c is None:
                    raise PdfSyntaxError("truncated xref table", lexer.pos)
                if t_a[0] != "num" or t_b[0] != "num" or t_c[0] != "kw":
                    raise PdfSyntaxError("malformed xref entry", lexer.pos)
                num = start + i
                if t_c[1] == b"n":
                    self.xref.setdefault(num, ("n", int(t_a[1]), int(t_b[1])))
                else:
                    self.xref.setdefault(num, ("f",))
            tok = lexer.next_token()
        if tok != ("kw", b"trailer"):
            raise PdfSyntaxError("xref table missing trailer", lexer.pos)
        parser = Parser(lexer.data, lexer.pos, resolver=self.resolve)
        trailer = parser.parse_value()
        if not isinstance(trailer, dict):
            raise PdfSyntaxError("trailer is not a dictionary", lexer.pos)
        return trailer

    def _load_xref_stream(self, stream: Stream):
        data = stream.get_data()
        w = [int(self.resolve(x)) for x in self.resolve(stream.dict.get("W", []))]
        if len(w) != 3:
            raise PdfSyntaxError("xref stream /W must have three entries")
        size = int(self.resolve(stream.dict.get("Size", 0)))
        index = self.resolve(stream.dict.get("Index"))
        if index is None:
            index = [0, size]
        index = [int(self.resolve(x)) for x in index]
        w1, w2, w3 = w
        row_len = w1 + w2 + w3
        pos = 0
        for i in range(0, len(index) - 1, 2):
            start, count = index[i], index[i + 1]
            for j in range(count):
                row = data[pos : pos + row_len]
                pos += row_len
                if len(row) < row_len:
                    return
                f1 = int.from_bytes(row[:w1], "big") if w1 else 1
                f2 = int.from_bytes(row[w1 : w1 + w2], "big")
                f3 = int.from_bytes(row[w1 + w2 :], "big") if w3 else 0
                num = start + j
                if f1 == 1:
                    self.xref.setdefault(num, ("n", f2, f3))
                elif f1 == 2:
                    self.xref.setdefault(num, ("o", f2, f3))
                else:
                    self.xref.setdefault(num, ("f",))

    # -- damage recovery -------------------------------------------------

    def _build_brute_xref(self) -> dict[int, tuple]:
        table: dict[int, tuple] = {}
        for m in _OBJ_HEADER_RE.finditer(self.data):
            # later definitions shadow earlier ones (incremental updates)
            table[int(m.group(1))] = ("n", m.start(), int(m.group(2)))
        return table

    def _brute_entry(self, num: int):
        if self._brute_xref is None:
            self._brute_xref = self._build_brute_xref()
        return self._brute_xref.get(num)

    def _use_brute_xref(self):
        if self._brute_xref is None:
            self._brute_xref = self._build_brute_xref()
        for num, entry in self._brute_xref.items():
            self.xref[num] = entry
        if "Root" not in self.trailer:
            for m in re.finditer(rb"trailer", self.data):
                parser = Parser(self.data, m.end(), resolver=self.resolve)
                try:
                    t = parser.parse_value()
                except PdfSyntaxError:
                    continue
                if isinstance(t, dict):
                    for key, value in t.items():
                        self.trailer.setdefault(key, value)

    def _find_root(self):
        if "Root" in self.trailer:
            return
        for num in sorted(self.xref):
            try:
                obj = self.get_object(Ref(num, 0))
            except PdfSyntaxError:
                continue
            if isinstance(obj, dict) and obj.get("Type") == "Catalog":
                self.trailer["Root"] = Ref(num, 0)
                return
        raise PdfSyntaxError("document catalog not found")

    # -- encryption -------------------------------------------------------

    def _setup_encryption(self, password: str | None):
        encrypt = self.trailer.get("Encrypt")
        if encrypt is None:
            return
        if isinstance(encrypt, Ref):
            self._encrypt_num = encrypt.num
        enc_dict = self.resolve(encrypt)
        if not isinstance(enc_dict, dict):
            raise PdfSyntaxError("encryption dictionary missing")
        ids = self.trailer.get("ID")
        first_id = b""
        if isinstance(ids, list) and ids:
            candidate = self.resolve(ids[0])
            if isinstance(candidate, bytes):
                first_id = candidate
        from .crypto import StandardDecryptor

        resolved = {k: self.resolve(v) for k, v in enc_dict.items()}
        self._decryptor = StandardDecryptor(resolved, first_id, password)

    def _decrypt_object(self, obj, num: int, gen: int):
        if isinstance(obj, bytes):
            return self._decryptor.decrypt(obj, num, gen)
        if isinstance(obj, list):
            return [self._decrypt_object(x, num, gen) for x in obj]
        if isinstance(obj, dict):
            return {k: self._decrypt_object(v, num, gen) for k, v in obj.items()}
        if isinstance(obj, Stream):
            if obj.dict.get("Type") == "XRef":
                return obj
            new = Stream(
                {k: self._decrypt_object(v, num, gen) for k, v in obj.dict.items()},
                self._decryptor.decrypt(obj.raw, num, gen),
                obj._resolver,
            )
            return new
        return obj

    @property
    def is_encrypted(self) -> bool:
        return self._decryptor is not None

    # -- page tree ---------------------------------------------------------

    def catalog(self) -> dict:
        root = self.resolve(self.trailer.get("Root"))
        if not isinstance(root, dict):
            raise PdfSyntaxError("document catalog not found")
        return root

    def get_pages(self) -> list[PageNode]:
        pages_obj = self.catalog().get("Pages")
        out: list[PageNode] = []
        visited: set[int] = set()
        self._walk_pages(pages_obj, {}, out, visited)
        if not out:
            raise PdfSyntaxError("document has no pages")
        return out

    def _walk_pages(self, node_ref, inherited: dict, out: list, visited: set):
        if isinstance(node_ref, Ref):
            if node_ref.num in visited:
                return
            visited.add(node_ref.num)
        node = self.resolve(node_ref)
        if not isinstance(node, dict):
            return
        local = dict(inherited)
        for key in _INHERITABLE:
            if key in node:
                local[key] = node[key]
        kids = self.resolve(node.get("Kids"))
        node_type = node.get("Type")
        if node_type == "Pages" or (isinstance(kids, list) and node_type != "Page"):
            for kid in kids or []:
                self._walk_pages(kid, local, out, visited)
            return
        mediabox = self.resolve(local.get("MediaBox"))
        box = _LETTER
        if isinstance(mediabox, list) and len(mediabox) == 4:
            vals = [float(self.resolve(v)) for v in mediabox]
            box = (
                min(vals[0], vals[2]),
                min(vals[1], vals[3]),
                max(vals[0], vals[2]),
                max(vals[1], vals[3]),
            )
        rotate = self.resolve(local.get("Rotate", 0))
        try:
            rotate = int(rotate) % 360
        except (TypeError, ValueError):
            rotate = 0
        if rotate not in (0, 90, 180, 270):
            rotate = 0
        resources_raw = local.get("Resources")
        resources = self.resolve(resources_raw)
        if not isinstance(resources, dict):
            resources = {}
            resources_raw = {}
        ref = node_ref if isinstance(node_ref, Ref) else None
        out.append(
            PageNode(
                ref=ref,
                obj=node,
                resources=resources,
                resources_raw=resources_raw,
                mediabox=box,
                rotate=rotate,
            )
        )

    def info_dict(self) -> dict:
        info = self.resolve(self.trailer.get("Info"))
        return info if isinstance(info, dict) else {}
