#!/usr/bin/env python3
"""Regenerates the bundled lexicon files under data/.

Inputs are the unpacked `cmudict` and `pypinyin` wheels:

    pip download cmudict pypinyin --no-deps -d /tmp/pkgs
    cd /tmp/pkgs && for f in *.whl; do python3 -m zipfile -e $f x; done
    python3 scripts/make_lexicons.py /tmp/pkgs/x data/

Outputs:
    cmudict.dict           classic "WORD  PH1 PH2" format, ";;;" comments
    pinyin_lexicon.tsv     hanzi<TAB>syllable+tone (first reading only)
    pinyin2cmu.tsv         syllable<TAB>INITIALS|FINALS
    phoneme_inventory.txt  phoneme<TAB>class
"""

import json
import os
import sys
import unicodedata

INITIALS = {
    "zh": "JH", "ch": "CH", "sh": "SH",
    "b": "B", "p": "P", "m": "M", "f": "F",
    "d": "D", "t": "T", "n": "N", "l": "L",
    "g": "G", "k": "K", "h": "HH",
    "j": "J", "q": "Q", "x": "X",
    "r": "R", "z": "Z", "c": "T S", "s": "S",
    "y": "Y", "w": "W",
}

FINALS = {
    "a": "AA", "ai": "AY", "an": "AE N", "ang": "AE NG", "ao": "AW",
    "e": "ER", "ei": "EY", "en": "AH N", "eng": "AH NG", "er": "AA R",
    "o": "AO", "ong": "UH NG", "ou": "OW",
    "i": "IY", "ia": "IY AA", "ian": "IY AE N", "iang": "IY AE NG",
    "iao": "IY AW", "ie": "IY EH", "in": "IY N", "ing": "IY NG",
    "iong": "IY UH NG", "iu": "IY UH", "io": "IY AO",
    "u": "UW", "ua": "UW AA", "uai": "UW AY", "uan": "UW AE N",
    "uang": "UW AE NG", "ui": "UW IY", "un": "UW AH N", "uo": "UW AO",
    "ueng": "UW AH NG",
    "v": "IY UW", "ve": "IY UW EH", "van": "IY UW AE N", "vn": "IY UW N",
}

# Syllables without a regular initial/final decomposition.
SPECIAL = {
    "m": ("", "M"),
    "n": ("", "N"),
    "ng": ("", "NG"),
    "hm": ("HH", "M"),
    "hng": ("HH", "NG"),
}

# After these initials a written "u" is the rounded front vowel.
UMLAUT_INITIALS = {"j", "q", "x", "y"}

TONE_MARKS = {"̄": 1, "́": 2, "̌": 3, "̀": 4}

ARPABET_CLASSES = "cmudict/data/cmudict.phones"
EXTRA_PHONEMES = [("AX", "vowel"), ("J", "affricate"), ("Q", "affricate"),
                  ("X", "fricative")]


def split_syllable(syl):
    if syl in SPECIAL:
        return SPECIAL[syl]
    for ini in sorted(INITIALS, key=len, reverse=True):
        if syl.startswith(ini) and len(syl) > len(ini):
            rest = syl[len(ini):]
            if ini in UMLAUT_INITIALS and rest.startswith("u"):
                rest = "v" + rest[1:]
            if rest in FINALS:
                return INITIALS[ini], FINALS[rest]
            return None
    if syl in FINALS:
        return "", FINALS[syl]
    return None


def to_tone3(marked):
    decomposed = unicodedata.normalize("NFD", marked)
    tone = 5
    out = []
    for ch in decomposed:
        if ch in TONE_MARKS:
            tone = TONE_MARKS[ch]
        elif ch == "̈":
            if not out or out[-1] != "u":
                return None
            out[-1] = "v"
        elif "a" <= ch <= "z":
            out.append(ch)
        else:
            return None
    return "".join(out), tone


def is_unified_ideograph(cp):
    # Same ranges the segmenter treats as hanzi. Compatibility ideographs
    # fold to unified ones under NFC, so they never reach a lookup.
    in_range = (0x4E00 <= cp <= 0x9FFF or 0x3400 <= cp <= 0x4DBF
                or 0x20000 <= cp <= 0x2A6DF or 0x2A700 <= cp <= 0x2EBEF
                or 0x30000 <= cp <= 0x323AF)
    return in_range and unicodedata.normalize("NFC", chr(cp)) == chr(cp)


def write_cmudict(src_root, out_dir):
    src = os.path.join(src_root, "cmudict/data/cmudict.dict")
    with open(src, encoding="utf-8") as f, \
            open(os.path.join(out_dir, "cmudict.dict"), "w",
                 encoding="utf-8", newline="\n") as out:
        out.write(";;; CMU Pronouncing Dictionary (see LICENSE.cmudict)\n")
        out.write(";;; Converted to classic WORD<two spaces>PHONEMES format.\n")
        for line in f:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            word, phones = line.split(" ", 1)
            out.write(f"{word.upper()}  {phones.strip()}\n")


def write_pinyin(src_root, out_dir):
    with open(os.path.join(src_root, "pypinyin/pinyin_dict.json"),
              encoding="utf-8") as f:
        table = json.load(f)
    used = {}
    rows = []
    for key in sorted(table, key=int):
        cp = int(key)
        if not is_unified_ideograph(cp):
            continue
        first = table[key].split(",")[0]
        parsed = to_tone3(first)
        if parsed is None:
            continue
        syl, tone = parsed
        split = split_syllable(syl)
        if split is None:
            continue
        used[syl] = split
        rows.append(f"{chr(cp)}\t{syl}{tone}")
    with open(os.path.join(out_dir, "pinyin_lexicon.tsv"), "w",
              encoding="utf-8", newline="\n") as out:
        out.write("\n".join(rows) + "\n")
    with open(os.path.join(out_dir, "pinyin2cmu.tsv"), "w",
              encoding="utf-8", newline="\n") as out:
        for syl in sorted(used):
            ini, fin = used[syl]
            out.write(f"{syl}\t{ini}|{fin}\n")


def write_inventory(src_root, out_dir):
    rows = []
    with open(os.path.join(src_root, ARPABET_CLASSES), encoding="utf-8") as f:
        for line in f:
            if line.strip():
                rows.append(tuple(line.split()))
    rows.extend(EXTRA_PHONEMES)
    rows.sort()
    with open(os.path.join(out_dir, "phoneme_inventory.txt"), "w",
              encoding="utf-8", newline="\n") as out:
        for ph, cls in rows:
            out.write(f"{ph}\t{cls}\n")


def main():
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    src_root, out_dir = sys.argv[1], sys.argv[2]
    os.makedirs(out_dir, exist_ok=True)
    write_cmudict(src_root, out_dir)
    write_pinyin(src_root, out_dir)
    write_inventory(src_root, out_dir)


if __name__ == "__main__":
    main()
