"""Font decoding: widths, encodings, ToUnicode maps, composite fonts."""

from pdfgrid.pdf.cos import Name
from pdfgrid.pdf.fonts import Font, glyph_to_text, parse_tounicode

IDENT = lambda x: x  # noqa: E731 - resolver for direct dicts


def width_of(f: Font, ch: str) -> float:
    """Width in em of a single simple-font code."""
    return list(f.iter_codes(ch.encode("latin-1")))[0][2]


def simple_font(**kwargs) -> Font:
    d = {Name("Type"): Name("Font"), Name("Subtype"): Name("Type1")}
    for k, v in kwargs.items():
        d[Name(k)] = v
    return Font(IDENT, d)


class TestStandard14:
    def test_helvetica_widths(self):
        f = simple_font(BaseFont=Name("Helvetica"))
        # 'A' is 667/1000 em, space 278/1000
        assert abs(width_of(f, "A") - 0.667) < 1e-9
        assert abs(f.space_width - 0.278) < 1e-9

    def test_courier_fixed_pitch(self):
        f = simple_font(BaseFont=Name("Courier"))
        for ch in "iWM ":
            assert abs(width_of(f, ch) - 0.6) < 1e-9

    def test_subset_prefix_stripped(self):
        f = simple_font(BaseFont=Name("ABCDEF+Helvetica-Bold"))
        assert abs(width_of(f, "A") - 0.722) < 1e-9

    def test_alias_arial(self):
        f = simple_font(BaseFont=Name("ArialMT"))
        assert abs(width_of(f, "A") - 0.667) < 1e-9

    def test_ascent_descent(self):
        f = simple_font(BaseFont=Name("Helvetica"))
        assert f.ascent > 0.6
        assert f.descent < 0


class TestExplicitWidths:
    def test_widths_array(self):
        f = simple_font(
            BaseFont=Name("Custom"),
            FirstChar=65,
            Widths=[500, 600, 700],
        )
        assert width_of(f, "A") == 0.5
        assert width_of(f, "B") == 0.6

    def test_missing_width_fallback(self):
        f = simple_font(
            BaseFont=Name("Custom"),
            FirstChar=65,
            Widths=[500],
            FontDescriptor={Name("MissingWidth"): 250},
        )
        assert width_of(f, "Z") == 0.25


class TestEncodings:
    def test_differences(self):
        f = simple_font(
            BaseFont=Name("Helvetica"),
            Encoding={
                Name("BaseEncoding"): Name("WinAnsiEncoding"),
                Name("Differences"): [65, Name("eacute"), Name("agrave")],
            },
        )
        codes = list(f.iter_codes(b"AB"))
        assert codes[0][1] == "é"
        assert codes[1][1] == "à"

    def test_winansi_default_for_truetype(self):
        d = {
            Name("Type"): Name("Font"),
            Name("Subtype"): Name("TrueType"),
            Name("BaseFont"): Name("Arial"),
        }
        f = Font(IDENT, d)
        # 0x92 is right single quote in WinAnsi
        assert list(f.iter_codes(b"\x92"))[0][1] == "’"

    def test_symbol_font_encoding(self):
        f = simple_font(BaseFont=Name("Symbol"))
        # 0x61 is alpha in the Symbol built-in encoding
        assert list(f.iter_codes(b"\x61"))[0][1] == "α"


class TestGlyphToText:
    def test_agl_name(self):
        assert glyph_to_text("eacute") == "é"

    def test_uni_form(self):
        assert glyph_to_text("uni0041") == "A"

    def test_u_form(self):
        assert glyph_to_text("u1D11E") == "\U0001d11e"

    def test_unknown(self):
        assert glyph_to_text("g1234") is None
        assert glyph_to_text(None) is None


CMAP = b"""
/CIDInit /ProcSet findresource begin
12 dict begin
begincmap
2 beginbfchar
<0041> <0058>
<0042> <00590059>
endbfchar
1 beginbfrange
<0050> <0052> <0061>
endbfrange
1 beginbfrange
<0060> <0061> [<007A> <0079>]
endbfrange
endcmap
"""


class TestToUnicode:
    def test_bfchar(self):
        m = parse_tounicode(CMAP)
        assert m[0x41] == "X"
        assert m[0x42] == "YY"

    def test_bfrange_increment(self):
        m = parse_tounicode(CMAP)
        assert m[0x50] == "a"
        assert m[0x51] == "b"
        assert m[0x52] == "c"

    def test_bfrange_array(self):
        m = parse_tounicode(CMAP)
        assert m[0x60] == "z"
        assert m[0x61] == "y"


class TestType0:
    def composite(self, w_array, to_unicode: bytes | None = None):
        desc = {
            Name("Type"): Name("Font"),
            Name("Subtype"): Name("CIDFontType2"),
            Name("BaseFont"): Name("Embedded"),
            Name("DW"): 1000,
            Name("W"): w_array,
        }
        d = {
            Name("Type"): Name("Font"),
            Name("Subtype"): Name("Type0"),
            Name("BaseFont"): Name("Embedded"),
            Name("Encoding"): Name("Identity-H"),
            Name("DescendantFonts"): [desc],
        }
        if to_unicode is not None:
            from pdfgrid.pdf.cos import Stream

            d[Name("ToUnicode")] = Stream({Name("Length"): len(to_unicode)}, to_unicode)
        return Font(IDENT, d)

    def test_two_byte_codes(self):
        f = self.composite([])
        codes = list(f.iter_codes(b"\x00\x41\x00\x42"))
        assert [c[0] for c in codes] == [0x41, 0x42]

    def test_w_array_list_form(self):
        f = self.composite([0x41, [500, 600]])
        codes = list(f.iter_codes(b"\x00\x41\x00\x42\x00\x43"))
        assert [c[2] for c in codes] == [0.5, 0.6, 1.0]

    def test_w_array_range_form(self):
        f = self.composite([0x41, 0x43, 750])
        codes = list(f.iter_codes(b"\x00\x41\x00\x43"))
        assert [c[2] for c in codes] == [0.75, 0.75]

    def test_tounicode_text(self):
        f = self.composite([], CMAP)
        codes = list(f.iter_codes(b"\x00\x41"))
        assert codes[0][1] == "X"
