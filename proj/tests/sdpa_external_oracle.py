#!/usr/bin/env python3
# Copyright 2026 The permcode Authors
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
"""Cross-checks `permcode sdp` against an independent solver on exports."""

import json
import os
import subprocess
import sys
import tempfile

CASES = [(4, "3,4"), (5, "4,5"), (5, "3"), (5, "2,5")]


def main():
    permcode, oracle = sys.argv[1], sys.argv[2]
    try:
        import cvxpy  # noqa: F401
    except ImportError:
        print("cvxpy is not available; skipping")
        return 77
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for n, dset in CASES:
            path = os.path.join(tmp, "n%d_%s.dat-s" % (n, dset.replace(",", "_")))
            ours = json.loads(subprocess.run(
                [permcode, "--json", "sdp", "--n", str(n), "--dset", dset,
                 "--export-sdpa", path],
                check=True, capture_output=True, text=True).stdout)
            theirs = json.loads(subprocess.run(
                [sys.executable, oracle, path],
                check=True, capture_output=True, text=True).stdout)
            diff = abs(ours["raw"] - theirs["value"])
            ok = diff <= 1e-5 * max(1.0, abs(ours["raw"]))
            failures += not ok
            print("n=%d D={%s}: permcode %.9f, %s %.9f (%s)" %
                  (n, dset, ours["raw"], theirs["solver"], theirs["value"],
                   "ok" if ok else "MISMATCH"))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
