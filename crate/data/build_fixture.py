#!/usr/bin/env python3
"""Build the bundled reference fixture from two public first-name datasets.

Inputs (fetched from PyPI, not redistributed here in raw form):
  * ``names`` 0.3.0: 1990 US Census first-name frequency lists
    (dist.female.first, dist.male.first; percent of the sampled population).
  * ``gender-guesser`` 0.4.0: nam_dict.txt, a multi-country first-name
    dictionary with gender codes and per-country log2 frequency classes.

Outputs one standardized TSV per source into data/fixture/:
  us_census_1990.tsv    weight = percent * 1000 (per 100k people)
  dict_<region>.tsv     weight = 2^(class-1); gender code split
                          F -> (w, 0), M -> (0, w), ?F/1F -> (0.8w, 0.2w),
                          ?M/1M -> (0.2w, 0.8w), ? -> (0.5w, 0.5w)

Usage:
  pip download names==0.3.0 gender-guesser==0.4.0 --no-deps -d /tmp/pkgs
  python3 data/build_fixture.py /tmp/pkgs
"""
import os
import sys
import tarfile
import zipfile

# nam_dict column order (one character per country, starting at offset 30)
DICT_COUNTRIES = [
    "GB", "IE", "US", "IT", "MT", "PT", "ES", "FR", "BE", "LU", "NL", "DE",
    "DE", "AT", "CH", "IS", "DK", "NO", "SE", "FI", "EE", "LV", "LT", "PL",
    "CZ", "SK", "HU", "RO", "BG", "BA", "HR", "XK", "MK", "ME", "RS", "SI",
    "AL", "GR", "RU", "BY", "MD", "UA", "AM", "AZ", "GE", "KZ", "TR", "SA",
    "IL", "CN", "IN", "JP", "KR", "VN", None,
]

REGIONS = {
    "anglo": {"GB", "IE", "US", "MT"},
    "romance": {"IT", "PT", "ES", "FR", "BE", "LU"},
    "central": {"NL", "DE", "AT", "CH"},
    "nordic": {"IS", "DK", "NO", "SE", "FI", "EE", "LV", "LT"},
    "eastern": {"PL", "CZ", "SK", "HU", "RO", "BG", "BA", "HR", "XK", "MK",
                "ME", "RS", "SI", "AL", "GR", "RU", "BY", "MD", "UA"},
    "asia": {"AM", "AZ", "GE", "KZ", "TR", "SA", "IL", "CN", "IN", "JP",
             "KR", "VN"},
}

SPLIT = {
    "F": (1.0, 0.0), "M": (0.0, 1.0),
    "?F": (0.8, 0.2), "1F": (0.8, 0.2),
    "?M": (0.2, 0.8), "1M": (0.2, 0.8),
    "?": (0.5, 0.5),
}

# keep dictionary names that reach this frequency class somewhere
MIN_CLASS = 7


def fmt(x):
    s = ("%.6f" % x).rstrip("0").rstrip(".")
    return s or "0"


def census(pkgs, out):
    tar = tarfile.open(os.path.join(pkgs, "names-0.3.0.tar.gz"))
    rows = {}
    for fname, idx in (("dist.female.first", 0), ("dist.male.first", 1)):
        data = tar.extractfile("names-0.3.0/names/" + fname).read().decode()
        for line in data.splitlines():
            parts = line.split()
            if len(parts) != 4:
                continue
            name = parts[0].capitalize()
            w = rows.setdefault(name, [0.0, 0.0])
            w[idx] += float(parts[1]) * 1000.0
    with open(os.path.join(out, "us_census_1990.tsv"), "w") as f:
        f.write("name\tdecade\tcountry\twf\twm\n")
        for name in sorted(rows):
            wf, wm = rows[name]
            f.write("%s\t1990\tUS\t%s\t%s\n" % (name, fmt(wf), fmt(wm)))
    return len(rows)


def dictionary(pkgs, out):
    whl = zipfile.ZipFile(os.path.join(pkgs, "gender_guesser-0.4.0-py2.py3-none-any.whl"))
    text = whl.read("gender_guesser/data/nam_dict.txt").decode("utf-8")
    lines = []
    best = {}
    for line in text.splitlines():
        if not line or line[0] in "#=":
            continue
        code = line[:2].strip()
        if code not in SPLIT:
            continue
        name = line[3:29].strip()
        if "+" in name or " " in name:
            continue
        values = line[30:30 + len(DICT_COUNTRIES)]
        freqs = []
        for i, ch in enumerate(values):
            if ch == " " or DICT_COUNTRIES[i] is None:
                continue
            freqs.append((DICT_COUNTRIES[i], int(ch, 16)))
        if not freqs:
            continue
        lines.append((name, code, freqs))
        top = max(c for _, c in freqs)
        best[name] = max(best.get(name, 0), top)

    keep = {n for n, c in best.items() if c >= MIN_CLASS}
    per_region = {r: {} for r in REGIONS}
    for name, code, freqs in lines:
        if name not in keep:
            continue
        pf, pm = SPLIT[code]
        for country, cls in freqs:
            w = 2.0 ** (cls - 1)
            for region, members in REGIONS.items():
                if country in members:
                    acc = per_region[region].setdefault((name, country), [0.0, 0.0])
                    acc[0] += pf * w
                    acc[1] += pm * w
    for region, entries in per_region.items():
        with open(os.path.join(out, "dict_%s.tsv" % region), "w") as f:
            f.write("name\tdecade\tcountry\twf\twm\n")
            for (name, country) in sorted(entries):
                wf, wm = entries[(name, country)]
                f.write("%s\t-\t%s\t%s\t%s\n" % (name, country, fmt(wf), fmt(wm)))
    return len(keep)


def main():
    pkgs = sys.argv[1] if len(sys.argv) > 1 else "/tmp/pkgs"
    out = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixture")
    os.makedirs(out, exist_ok=True)
    n1 = census(pkgs, out)
    n2 = dictionary(pkgs, out)
    print("census names: %d, dictionary names: %d" % (n1, n2))


if __name__ == "__main__":
    main()
