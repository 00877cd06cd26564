#!/usr/bin/env python3
"""Download public network datasets and convert them to plain edge lists.

Writes ``<stem>.txt`` files (one ``u v`` pair per line) into the target
directory, which the acceptance tests read via ``$NETLEVELS_DATA`` (default
``data/``). Source URLs point at the usual public mirrors. They change over
time, so each one can be overridden with ``--url stem=URL``.

    python scripts/fetch_datasets.py --dest data
    python scripts/fetch_datasets.py --only power netscience
"""

from __future__ import annotations

import argparse
import gzip
import io
import re
import sys
import urllib.request
import zipfile
from pathlib import Path

# stem -> (url, member inside archive or None, format)
SOURCES: dict[str, tuple[str, str | None, str]] = {
    "power": ("http://www-personal.umich.edu/~mejn/netdata/power.zip", "power.gml", "gml"),
    "netscience": ("http://www-personal.umich.edu/~mejn/netdata/netscience.zip", "netscience.gml", "gml"),
    "email": ("http://deim.urv.cat/~alexandre.arenas/data/xarxes/email.zip", "email.txt", "columns"),
    "usairline": ("http://vlado.fmf.uni-lj.si/pub/networks/data/mix/USAir97.net", None, "pajek"),
    "geom": ("http://vlado.fmf.uni-lj.si/pub/networks/data/collab/Geom.zip", "Geom.net", "pajek"),
    "yeast": ("http://vlado.fmf.uni-lj.si/pub/networks/data/bio/Yeast/yeast.zip", "YeastS.net", "pajek"),
    "facebook": ("http://socialnetworks.mpi-sws.org/data/facebook-links.txt.gz", None, "columns"),
}

_GML_EDGE = re.compile(r"edge\s*\[(.*?)\]", re.S)
_GML_FIELD = re.compile(r"\b(source|target)\s+(-?\d+)")


def gml_edges(text: str):
    for block in _GML_EDGE.findall(text):
        fields = dict(_GML_FIELD.findall(block))
        yield fields["source"], fields["target"]


def pajek_edges(text: str):
    section = None
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            section = line.split()[0].lower()
            continue
        tokens = line.split()
        if section in ("*edges", "*arcs"):
            yield tokens[0], tokens[1]
        elif section in ("*edgeslist", "*arcslist"):
            for other in tokens[1:]:
                yield tokens[0], other


def column_edges(text: str):
    for line in text.splitlines():
        tokens = line.split()
        if len(tokens) >= 2 and not line.lstrip().startswith(("#", "%")):
            yield tokens[0], tokens[1]


PARSERS = {"gml": gml_edges, "pajek": pajek_edges, "columns": column_edges}


def fetch(url: str, member: str | None) -> str:
    with urllib.request.urlopen(url, timeout=120) as resp:
        payload = resp.read()
    if url.endswith(".gz"):
        payload = gzip.decompress(payload)
    elif url.endswith(".zip"):
        with zipfile.ZipFile(io.BytesIO(payload)) as zf:
            names = zf.namelist()
            name = member if member in names else next(
                n for n in names if n.lower().endswith(Path(member or "").suffix.lower() or ".txt")
            )
            payload = zf.read(name)
    return payload.decode("utf-8", errors="replace")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--dest", default="data", help="output directory")
    parser.add_argument("--only", nargs="*", choices=sorted(SOURCES), help="subset of datasets")
    parser.add_argument("--url", action="append", default=[], metavar="STEM=URL", help="override a source URL")
    args = parser.parse_args(argv)

    sources = dict(SOURCES)
    for item in args.url:
        stem, _, url = item.partition("=")
        if stem not in sources:
            parser.error(f"unknown dataset {stem!r}")
        sources[stem] = (url, sources[stem][1], sources[stem][2])

    dest = Path(args.dest)
    dest.mkdir(parents=True, exist_ok=True)
    failed = 0
    for stem in args.only or sorted(sources):
        url, member, fmt = sources[stem]
        try:
            text = fetch(url, member)
            pairs = list(PARSERS[fmt](text))
        except Exception as exc:  # report and continue with the rest
            print(f"{stem}: failed ({exc})", file=sys.stderr)
            failed += 1
            continue
        out = dest / f"{stem}.txt"
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(f"# source: {url}\n")
            fh.writelines(f"{u} {v}\n" for u, v in pairs)
        print(f"{stem}: {len(pairs)} lines -> {out}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
