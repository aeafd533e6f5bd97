"""Drive the command line interface from Python.

Every subcommand prints one JSON report with a fixed envelope, so the
CLI doubles as a scripting surface. This walks the main verbs against
a throwaway cache file.
"""

import json
import os
import tempfile
from contextlib import redirect_stdout
from io import StringIO

from fanram.cli import main


def run(*argv):
    buf = StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, json.loads(buf.getvalue())


code, doc = run("detect", "--graph", "G6:D~{", "--target", "K4")
print("detect K4 in K5:", "found" if code == 0 else "absent")

code, doc = run("bound", "--formula", "thm1.4", "--n", "6")
print("thm1.4 at n=6:", doc["report"]["value"])

with tempfile.TemporaryDirectory() as tmp:
    cache = os.path.join(tmp, "cache.jsonl")
    code, doc = run(
        "ramsey", "--red", "M:2", "--blue", "F:2,1",
        "--lo", "2", "--hi", "8", "--cache", cache,
    )
    print("ramsey M:2 vs F:2,1:", doc["value"], doc["status"])

    # second run hits the cache; the replayed report is byte-identical
    code, doc2 = run(
        "ramsey", "--red", "M:2", "--blue", "F:2,1",
        "--lo", "2", "--hi", "8", "--cache", cache,
    )
    print("cache replay equal:", doc == doc2)

    code, doc = run("cache", "--cache", cache)
    print("cache holds", doc["records"], "record(s)")
