"""PDF object-layer tests: lexing, parsing, xref loading, page walking."""

import zlib

import pytest

from pdfgrid.errors import PdfSyntaxError
from pdfgrid.pdf.cos import Document, Lexer, Name, Parser, Ref, Stream, decode_text_string


def tokens(data: bytes) -> list:
    lx = Lexer(data)
    out = []
    while True:
        tok = lx.next_token()
        if tok is None:
            return out
        out.append(tok)


class TestLexer:
    def test_numbers(self):
        toks = tokens(b"0 42 -7 +3 3.14 -0.5 .25 4.")
        assert [t[1] for t in toks] == [0, 42, -7, 3, 3.14, -0.5, 0.25, 4.0]

    def test_names_with_hex_escapes(self):
        toks = tokens(b"/Name /A#20B /Lime#20Green /F#23oo")
        assert [t[1] for t in toks] == ["Name", "A B", "Lime Green", "F#oo"]

    def test_empty_name(self):
        toks = tokens(b"/ /X")
        assert [t[1] for t in toks] == ["", "X"]

    def test_literal_string_escapes(self):
        toks = tokens(rb"(plain) (a\(b\)c) (tab\there) (oct\101al) (back\\slash)")
        assert [t[1] for t in toks] == [
            b"plain", b"a(b)c", b"tab\there", b"octAal", b"back\\slash",
        ]

    def test_literal_string_nested_parens(self):
        toks = tokens(b"(outer (inner) tail)")
        assert toks[0][1] == b"outer (inner) tail"

    def test_literal_string_line_continuation(self):
        toks = tokens(b"(one\\\ntwo)")
        assert toks[0][1] == b"onetwo"

    def test_octal_three_digits(self):
        toks = tokens(rb"(\053) (\53) (\0533)")
        assert [t[1] for t in toks] == [b"+", b"+", b"+3"]

    def test_hex_strings(self):
        # odd digit count: final digit is padded with a trailing zero
        toks = tokens(b"<48656C6C6F> <48656C6C6F7> <>")
        assert [t[1] for t in toks] == [b"Hello", b"Hellop", b""]

    def test_delimiters_and_keywords(self):
        toks = tokens(b"<< /K [1 2 R] >> stream true false null")
        kinds = [t[0] for t in toks]
        assert kinds == ["<<", "name", "[", "num", "num", "kw", "]", ">>", "kw", "kw", "kw", "kw"]

    def test_comments_skipped(self):
        toks = tokens(b"1 % a comment\n2")
        assert [t[1] for t in toks] == [1, 2]


class TestParser:
    def parse(self, data: bytes):
        return Parser(data).parse_value()

    def test_dict_and_array(self):
        v = self.parse(b"<< /A [1 2 3] /B (x) /C /N >>")
        assert v[Name("A")] == [1, 2, 3]
        assert v[Name("B")] == b"x"
        assert v[Name("C")] == Name("N")

    def test_reference(self):
        v = self.parse(b"[1 0 R 2 5 R 3]")
        assert v == [Ref(1, 0), Ref(2, 5), 3]

    def test_number_pair_not_reference(self):
        assert self.parse(b"[1 0 4]") == [1, 0, 4]

    def test_booleans_and_null(self):
        assert self.parse(b"[true false null]") == [True, False, None]

    def test_nested_depth_guard(self):
        deep = b"[" * 200 + b"]" * 200
        with pytest.raises(PdfSyntaxError):
            self.parse(deep)

    def test_stream_with_length(self):
        data = b"<< /Length 5 >>\nstream\nhello\nendstream"
        v = self.parse(data)
        assert isinstance(v, Stream)
        assert v.raw == b"hello"

    def test_stream_bad_length_falls_back_to_scan(self):
        data = b"<< /Length 9999 >>\nstream\nhello\nendstream"
        v = self.parse(data)
        assert isinstance(v, Stream)
        assert v.raw == b"hello"

    def test_parse_indirect(self):
        num, gen, obj = Parser(b"7 0 obj << /X 1 >> endobj").parse_indirect()
        assert (num, gen) == (7, 0)
        assert obj[Name("X")] == 1


class TestDecodeTextString:
    def test_utf16be(self):
        assert decode_text_string(b"\xfe\xff\x00H\x00i") == "Hi"

    def test_pdfdoc(self):
        assert decode_text_string(b"Hello") == "Hello"

    def test_pdfdoc_bullet(self):
        # 0x80 maps to BULLET in PDFDocEncoding
        assert decode_text_string(b"a\x80b") == "a•b"


def minimal_pdf(extra_page_entries: bytes = b"", content: bytes = b"") -> bytes:
    """Hand-assembled one-page PDF with a classic xref table."""
    objects = [
        b"1 0 obj\n<< /Type /Catalog /Pages 2 0 R >>\nendobj\n",
        b"2 0 obj\n<< /Type /Pages /Kids [3 0 R] /Count 1 >>\nendobj\n",
        b"3 0 obj\n<< /Type /Page /Parent 2 0 R /MediaBox [0 0 612 792] "
        + extra_page_entries
        + b" /Contents 4 0 R >>\nendobj\n",
        b"4 0 obj\n<< /Length " + str(len(content)).encode() + b" >>\nstream\n"
        + content
        + b"\nendstream\nendobj\n",
    ]
    header = b"%PDF-1.4\n"
    body = b""
    offsets = []
    for obj in objects:
        offsets.append(len(header) + len(body))
        body += obj
    xref_pos = len(header) + len(body)
    xref = b"xref\n0 5\n0000000000 65535 f \n"
    for off in offsets:
        xref += f"{off:010d} 00000 n \n".encode()
    trailer = b"trailer\n<< /Size 5 /Root 1 0 R >>\nstartxref\n" + str(xref_pos).encode() + b"\n%%EOF\n"
    return header + body + xref + trailer


class TestDocument:
    def test_minimal_parse(self):
        doc = Document(minimal_pdf())
        pages = doc.get_pages()
        assert len(pages) == 1
        assert pages[0].mediabox == (0.0, 0.0, 612.0, 792.0)
        assert pages[0].rotate == 0

    def test_version(self):
        doc = Document(minimal_pdf())
        assert doc.version == "1.4"

    def test_header_not_at_offset_zero(self):
        doc = Document(b"garbage prefix " + minimal_pdf())
        assert len(doc.get_pages()) == 1

    def test_missing_header_rejected(self):
        with pytest.raises(PdfSyntaxError):
            Document(b"not a pdf at all")

    def test_rotate_inherited_and_normalized(self):
        doc = Document(minimal_pdf(b"/Rotate 90"))
        assert doc.get_pages()[0].rotate == 90
        doc = Document(minimal_pdf(b"/Rotate -90"))
        assert doc.get_pages()[0].rotate == 270
        doc = Document(minimal_pdf(b"/Rotate 45"))  # non-quadrant angles are ignored
        assert doc.get_pages()[0].rotate == 0

    def test_mediabox_normalized(self):
        doc = Document(minimal_pdf(b"/MediaBox [612 792 0 0]"))
        assert doc.get_pages()[0].mediabox == (0.0, 0.0, 612.0, 792.0)

    def test_broken_xref_offset_recovers(self):
        data = minimal_pdf()
        # corrupt the startxref target so the brute-force scan must kick in
        broken = data.replace(b"startxref\n", b"startxref\n9")[: len(data)]
        doc = Document(broken)
        assert len(doc.get_pages()) == 1

    def test_truncated_xref_recovers(self):
        data = minimal_pdf()
        cut = data[: data.rindex(b"xref")] + b"%%EOF\n"
        doc = Document(cut)
        assert len(doc.get_pages()) == 1

    def test_info_dict_absent(self):
        assert Document(minimal_pdf()).info_dict() == {}


def xref_stream_pdf() -> bytes:
    """One-page PDF using a cross-reference stream and an object stream."""
    # objects 1 (catalog), 2 (pages), 3 (page) live inside object stream 5
    inner = b"<< /Type /Catalog /Pages 2 0 R >> << /Type /Pages /Kids [3 0 R] /Count 1 >> " \
            b"<< /Type /Page /Parent 2 0 R /MediaBox [0 0 200 300] /Contents 4 0 R >>"
    pairs = []
    pos = 0
    # offsets of the three dicts within `inner`
    offs = [0, inner.index(b"<<", 1)]
    offs.append(inner.index(b"<<", offs[1] + 1))
    for num, off in zip((1, 2, 3), offs):
        pairs.append(f"{num} {off}".encode())
    head = b" ".join(pairs) + b" "
    objstm_payload = head + inner
    objstm_z = zlib.compress(objstm_payload)

    content = b""
    contents_obj = b"4 0 obj\n<< /Length 0 >>\nstream\n\nendstream\nendobj\n"

    header = b"%PDF-1.5\n"
    body = b""
    offsets = {}
    offsets[4] = len(header)
    body += contents_obj
    offsets[5] = len(header) + len(body)
    body += (
        b"5 0 obj\n<< /Type /ObjStm /N 3 /First " + str(len(head)).encode()
        + b" /Length " + str(len(objstm_z)).encode() + b" /Filter /FlateDecode >>\nstream\n"
        + objstm_z + b"\nendstream\nendobj\n"
    )
    xref_off = len(header) + len(body)

    # xref stream obj 6: W [1 2 1]; entries for objects 0..6
    def entry(t, a, b):
        return bytes([t]) + a.to_bytes(2, "big") + bytes([b])

    rows = [
        entry(0, 0, 0),          # 0: free
        entry(2, 5, 0),          # 1: in objstm 5 index 0
        entry(2, 5, 1),          # 2
        entry(2, 5, 2),          # 3
        entry(1, offsets[4], 0),  # 4: direct
        entry(1, offsets[5], 0),  # 5
        entry(1, xref_off, 0),    # 6: the xref stream itself
    ]
    xref_payload = zlib.compress(b"".join(rows))
    body += (
        b"6 0 obj\n<< /Type /XRef /W [1 2 1] /Size 7 /Root 1 0 R /Filter /FlateDecode /Length "
        + str(len(xref_payload)).encode() + b" >>\nstream\n" + xref_payload
        + b"\nendstream\nendobj\n"
    )
    tail = b"startxref\n" + str(xref_off).encode() + b"\n%%EOF\n"
    return header + body + tail


class TestXrefStream:
    def test_objstm_pages(self):
        doc = Document(xref_stream_pdf())
        pages = doc.get_pages()
        assert len(pages) == 1
        assert pages[0].mediabox == (0.0, 0.0, 200.0, 300.0)


class TestStreamFilters:
    def test_get_data_flate(self):
        payload = zlib.compress(b"abc" * 50)
        s = Stream({Name("Filter"): Name("FlateDecode"), Name("Length"): len(payload)}, payload)
        assert s.get_data() == b"abc" * 50

    def test_filter_chain(self):
        import binascii

        payload = binascii.hexlify(zlib.compress(b"xyz")) + b">"
        s = Stream(
            {Name("Filter"): [Name("ASCIIHexDecode"), Name("FlateDecode")]},
            payload,
        )
        assert s.get_data() == b"xyz"
