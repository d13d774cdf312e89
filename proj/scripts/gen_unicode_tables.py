#!/usr/bin/env python3
# Copyright 2026 mtscore authors
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
"""Regenerates src/core/unicode_tables.inc from the Python unicodedata
database.  Run manually when bumping the Unicode version; the output is
committed so builds need no Python."""

import sys
import unicodedata


def ranges(predicate):
    out = []
    start = None
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            ok = False
        else:
            ok = predicate(chr(cp))
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, 0x10FFFF))
    return out


def lower_entries():
    out = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        c = chr(cp)
        low = c.lower()
        if low != c:
            cps = [ord(x) for x in low]
            assert 1 <= len(cps) <= 3, hex(cp)
            out.append((cp, cps))
    return out


def main():
    lows = lower_entries()
    cased = ranges(lambda c: unicodedata.category(c) in ("Lu", "Ll", "Lt"))
    # Approximation of Case_Ignorable: marks, format chars, modifiers, plus
    # the apostrophe-like punctuation that joins cased letters.
    ignorable_extra = {0x0027, 0x00AD, 0x2018, 0x2019, 0x00B7, 0x05F4, 0x2027, 0x30FB, 0xFF1A, 0xFF0E}
    cats = ("Mn", "Me", "Cf", "Lm", "Sk")
    ignorable = ranges(lambda c: unicodedata.category(c) in cats or ord(c) in ignorable_extra)
    spaces = ranges(lambda c: c.isspace())
    letters = ranges(lambda c: unicodedata.category(c).startswith("L"))

    w = sys.stdout.write
    w("// Generated by scripts/gen_unicode_tables.py (Unicode %s). Do not edit.\n"
      % unicodedata.unidata_version)
    w("// clang-format off\n")
    w("struct LowerEntry { char32_t cp; char32_t to[3]; };\n")
    w("inline constexpr LowerEntry kLowerTable[] = {\n")
    for cp, cps in lows:
        padded = cps + [0] * (3 - len(cps))
        w("  {0x%X,{0x%X,0x%X,0x%X}},\n" % (cp, *padded))
    w("};\n")

    def dump_ranges(name, rs):
        w("inline constexpr char32_t %s[][2] = {\n" % name)
        for a, b in rs:
            w("  {0x%X,0x%X},\n" % (a, b))
        w("};\n")

    dump_ranges("kCasedRanges", cased)
    dump_ranges("kCaseIgnorableRanges", ignorable)
    dump_ranges("kSpaceRanges", spaces)
    dump_ranges("kLetterRanges", letters)
    w("// clang-format on\n")


if __name__ == "__main__":
    main()
