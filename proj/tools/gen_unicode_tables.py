#!/usr/bin/env python3
# Copyright 2026 The ukcs Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates src/unicode_tables.inc from the Python Unicode database.

Run from the repository root:

    python3 tools/gen_unicode_tables.py > src/unicode_tables.inc

The `regex` module supplies script extents (Latin/Cyrillic) and the
White_Space property; everything else comes from `unicodedata`.
"""

import sys
import unicodedata

try:
    import regex
except ImportError:
    regex = None

MAX_CP = 0x110000


def ranges_from_pred(pred):
    out = []
    start = None
    for cp in range(MAX_CP):
        if pred(cp):
            if start is None:
                start = cp
        else:
            if start is not None:
                out.append((start, cp - 1))
                start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def cat(cp):
    return unicodedata.category(chr(cp))


def script_pred(name):
    if regex is not None:
        pat = regex.compile(r"\p{Script=%s}" % name)
        return lambda cp: bool(pat.fullmatch(chr(cp)))
    # Fallback: principal blocks, good enough for Czech and Ukrainian text.
    blocks = {
        "Latin": [(0x41, 0x5A), (0x61, 0x7A), (0xAA, 0xAA), (0xBA, 0xBA),
                  (0xC0, 0xD6), (0xD8, 0xF6), (0xF8, 0x2B8), (0x1E00, 0x1EFF),
                  (0x2C60, 0x2C7F), (0xA720, 0xA7FF), (0xFB00, 0xFB06),
                  (0xFF21, 0xFF3A), (0xFF41, 0xFF5A)],
        "Cyrillic": [(0x400, 0x484), (0x487, 0x52F), (0x1C80, 0x1C88),
                     (0x2DE0, 0x2DFF), (0xA640, 0xA69F), (0xFE2E, 0xFE2F)],
    }[name]
    return lambda cp: any(lo <= cp <= hi for lo, hi in blocks)


def whitespace_pred():
    if regex is not None:
        pat = regex.compile(r"\s")
        return lambda cp: bool(pat.fullmatch(chr(cp)))
    ws = set([0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x20, 0x85, 0xA0, 0x1680,
              0x2028, 0x2029, 0x202F, 0x205F, 0x3000] +
             list(range(0x2000, 0x200B)))
    return lambda cp: cp in ws


def single_map(fn, cp):
    """Returns fn(chr(cp)) if it is a single codepoint != cp, else None."""
    try:
        mapped = fn(chr(cp))
    except ValueError:
        return None
    if len(mapped) == 1 and mapped != chr(cp):
        return ord(mapped)
    return None


def emit_ranges(name, ranges):
    print(f"inline constexpr CpRange {name}[] = {{")
    for i in range(0, len(ranges), 4):
        row = ", ".join(f"{{0x{lo:X}, 0x{hi:X}}}" for lo, hi in ranges[i:i + 4])
        print(f"    {row},")
    print("};")
    print()


def emit_pairs(name, pairs):
    print(f"inline constexpr CpPair {name}[] = {{")
    for i in range(0, len(pairs), 4):
        row = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in pairs[i:i + 4])
        print(f"    {row},")
    print("};")
    print()


def main():
    print("// Generated by tools/gen_unicode_tables.py -- do not edit.")
    print(f"// Unicode database version {unicodedata.unidata_version}"
          f" (python {sys.version.split()[0]})")
    print()

    emit_ranges("kNonPrintable", ranges_from_pred(lambda cp: cat(cp) in ("Cc", "Cf")))
    emit_ranges("kLetter", ranges_from_pred(lambda cp: cat(cp).startswith("L")))
    emit_ranges("kUpper", ranges_from_pred(lambda cp: cat(cp) in ("Lu", "Lt")))
    emit_ranges("kLower", ranges_from_pred(lambda cp: cat(cp) == "Ll"))
    emit_ranges("kDigit", ranges_from_pred(lambda cp: cat(cp) == "Nd"))
    emit_ranges("kWhitespace", ranges_from_pred(whitespace_pred()))
    emit_ranges("kLatin", ranges_from_pred(script_pred("Latin")))
    emit_ranges("kCyrillic", ranges_from_pred(script_pred("Cyrillic")))

    lower, upper, title = [], [], []
    for cp in range(MAX_CP):
        c = cat(cp)
        if not c.startswith("L"):
            continue
        m = single_map(str.lower, cp)
        if m is not None:
            lower.append((cp, m))
        m = single_map(str.upper, cp)
        if m is not None:
            upper.append((cp, m))
        m = single_map(str.title, cp)
        if m is not None:
            title.append((cp, m))
    emit_pairs("kToLower", lower)
    emit_pairs("kToUpper", upper)
    emit_pairs("kToTitle", title)


if __name__ == "__main__":
    main()
