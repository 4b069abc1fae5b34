"""Suite reports, rendered the way the command line does.

Each (registry entry, suite) cell produces one report with a status, a
replayable witness, a certificate, and the theorem tags it leaned on.
This script runs a handful of instructive cells in-process and prints
the text rendering; the equivalent shell commands appear at the end.
"""

from skewarch.registry import RunConfig, find_entry, registry_entries
from skewarch.reports import render_report_text
from skewarch.suites import run_one

CELLS = (
    ("zmod:6", "lemma-2-3"),        # contrapositive witnesses
    ("zmod:6", "falsify"),          # explicit divisibility chain
    ("gf:2:2+endo:frob", "thm-4-4"),  # theorem shortcut
    ("xyq:gf:2:1:N=8+endo:xsq", "examples-4-8-9"),
)


def main():
    print("registry entries:")
    for e in registry_entries():
        print("  %-30s %s" % (e.id, e.provenance))
    print()

    config = RunConfig(seed=42)
    for entry_id, suite_id in CELLS:
        print(render_report_text(run_one(find_entry(entry_id), suite_id,
                                         config)))

    print("shell equivalents:")
    for entry_id, suite_id in CELLS:
        print("  skewarch explain --entry '%s' --suite %s --seed 42"
              % (entry_id, suite_id))
    print("  skewarch run --entry all --suite all --seed 42   "
          "# full JSON matrix, exit 0 unless a theorem is contradicted")


if __name__ == "__main__":
    main()
