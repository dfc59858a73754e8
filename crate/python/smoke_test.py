"""Smoke test for the `recosc` extension module.

Run after `maturin develop -m crates/py/Cargo.toml --features extension-module`,
or directly: if the module is not importable it is built with cargo and loaded
from the target directory.
"""

import json
import os
import shutil
import subprocess
import sys
import tempfile

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def load():
    try:
        import recosc
        return recosc
    except ImportError:
        pass
    subprocess.run(
        ["cargo", "build", "--release", "-p", "recosc-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    lib = {"darwin": "librecosc.dylib", "win32": "recosc.dll"}.get(sys.platform, "librecosc.so")
    built = os.path.join(ROOT, "target", "release", lib)
    ext = "recosc.pyd" if sys.platform == "win32" else "recosc.so"
    tmp = tempfile.mkdtemp()
    shutil.copy(built, os.path.join(tmp, ext))
    sys.path.insert(0, tmp)
    import recosc
    return recosc


def main():
    m = load()
    assert m.classify(["1", "1"], ["0", "1"]) == "eventually_positive"
    assert m.classify(["-2"], ["1"]) == "oscillates"
    assert m.signs(["-2"], ["1"], 6) == "+-+-+-"
    assert len(m.multiples(1, 5, 1, 2)) == 10
    assert m.empty_square_witness(1, 7, 3, 7) is None
    assert m.empty_square_witness(1, 5, 2, 5) is not None
    doc = {
        "mode": "root_form",
        "root_form": {
            "pairs": [
                {"modulus": "2", "angle": {"rational": "7/10"}, "coefficient": {"re": "1/2", "im": "0"}},
                {"modulus": "2", "angle": {"rational": "1/5"}, "coefficient": {"re": "1/2", "im": "0"}},
            ]
        },
    }
    report = json.loads(m.analyze(json.dumps(doc)))
    assert report["report"]["verdict"]["kind"] == "oscillates"
    try:
        m.classify(["2/4"], ["1"])
    except ValueError:
        pass
    else:
        raise AssertionError("unreduced rational accepted")
    try:
        m.empty_square_witness(1, 4, 1, 4)
    except ValueError:
        pass
    else:
        raise AssertionError("hypothesis violation accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
