"""Stream filter decoders.

Covers the filters that matter for text and vector content: Flate (with
the PNG predictors cross-reference streams rely on), ASCIIHex, ASCII85,
and RunLength.  Image-only filters (DCT, JPX, CCITT) are passed through
untouched because table extraction never decodes raster data.
"""

from __future__ import annotations

import base64
import zlib

from ..errors import PdfSyntaxError

PASSTHROUGH = {"DCTDecode", "DCT", "JPXDecode", "CCITTFaxDecode", "CCF", "JBIG2Decode", "Crypt"}


def apply_png_predictor(data: bytes, colors: int, bpc: int, columns: int) -> bytes:
    """Undo PNG row filtering (predictors 10..15) on decompressed data."""
    bpp = max(1, (colors * bpc) // 8)
    row_len = (columns * colors * bpc + 7) // 8
    stride = row_len + 1
    if len(data) % stride:
        # tolerate a truncated final row
        data = data[: len(data) - (len(data) % stride)]
    out = bytearray()
    prev = bytearray(row_len)
    for off in range(0, len(data), stride):
        ftype = data[off]
        row = bytearray(data[off + 1 : off + stride])
        if ftype == 0:
            pass
        elif ftype == 1:
            for i in range(bpp, row_len):
                row[i] = (row[i] + row[i - bpp]) & 0xFF
        elif ftype == 2:
            for i in range(row_len):
                row[i] = (row[i] + prev[i]) & 0xFF
        elif ftype == 3:
            for i in range(row_len):
                left = row[i - bpp] if i >= bpp else 0
                row[i] = (row[i] + ((left + prev[i]) >> 1)) & 0xFF
        elif ftype == 4:
            for i in range(row_len):
                a = row[i - bpp] if i >= bpp else 0
                b = prev[i]
                c = prev[i - bpp] if i >= bpp else 0
                p = a + b - c
                pa, pb, pc = abs(p - a), abs(p - b), abs(p - c)
                if pa <= pb and pa <= pc:
                    pred = a
                elif pb <= pc:
                    pred = b
                else:
                    pred = c
                row[i] = (row[i] + pred) & 0xFF
        else:
            raise PdfSyntaxError(f"unknown PNG predictor row filter {ftype}")
        out.extend(row)
        prev = row
    return bytes(out)


def flate_decode(data: bytes, params: dict | None) -> bytes:
    try:
        raw = zlib.decompress(data)
    except zlib.error:
        # salvage what a truncated stream still yields
        d = zlib.decompressobj()
        try:
            raw = d.decompress(data)
        except zlib.error as exc:
            raise PdfSyntaxError(f"flate decode failed: {exc}") from exc
    if params:
        predictor = int(params.get("Predictor", 1))
        if predictor >= 10:
            raw = apply_png_predictor(
                raw,
                int(params.get("Colors", 1)),
                int(params.get("BitsPerComponent", 8)),
                int(params.get("Columns", 1)),
            )
        elif predictor == 2:
            raise PdfSyntaxError("TIFF predictor 2 is not supported")
    return raw


def ascii_hex_decode(data: bytes) -> bytes:
    end = data.find(b">")
    if end != -1:
        data = data[:end]
    hexstr = b"".join(data.split())
    if len(hexstr) % 2:
        hexstr += b"0"
    try:
        return bytes.fromhex(hexstr.decode("ascii"))
    except (ValueError, UnicodeDecodeError) as exc:
        raise PdfSyntaxError(f"bad ASCIIHex data: {exc}") from exc


def ascii85_decode(data: bytes) -> bytes:
    data = b"".join(data.split())
    if data.startswith(b"<~"):
        data = data[2:]
    if data.endswith(b"~>"):
        data = data[:-2]
    try:
        return base64.a85decode(data)
    except ValueError as exc:
        raise PdfSyntaxError(f"bad ASCII85 data: {exc}") from exc


def run_length_decode(data: bytes) -> bytes:
    out = bytearray()
    i = 0
    n = len(data)
    while i < n:
        length = data[i]
        i += 1
        if length == 128:
            break
        if length < 128:
            out.extend(data[i : i + length + 1])
            i += length + 1
        else:
            if i < n:
                out.extend(data[i : i + 1] * (257 - length))
                i += 1
    return bytes(out)


_DECODERS = {
    "FlateDecode": flate_decode,
    "Fl": flate_decode,
    "ASCIIHexDecode": lambda d, p: ascii_hex_decode(d),
    "AHx": lambda d, p: ascii_hex_decode(d),
    "ASCII85Decode": lambda d, p: ascii85_decode(d),
    "A85": lambda d, p: ascii85_decode(d),
    "RunLengthDecode": lambda d, p: run_length_decode(d),
    "RL": lambda d, p: run_length_decode(d),
}


def decode_stream(data: bytes, filters: list[str], parms: list[dict | None]) -> bytes:
    """Run `data` through the filter chain in order."""
    for name, params in zip(filters, parms):
        if name in PASSTHROUGH:
            return data
        decoder = _DECODERS.get(name)
        if decoder is None:
            raise PdfSyntaxError(f"unsupported stream filter /{name}")
        data = decoder(data, params)
    return data
