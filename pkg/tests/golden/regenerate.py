"""Rewrite the stored reports from commands.txt; run after an intended output change."""

import contextlib
import io
import shlex
from pathlib import Path

from coxwalls.cli import run

HERE = Path(__file__).parent


def commands():
    for line in (HERE / "commands.txt").read_text().splitlines():
        if line.strip() and not line.startswith("#"):
            name, rest = line.split(None, 1)
            yield name, shlex.split(rest)


def capture(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = run(argv)
    return code, buf.getvalue()


if __name__ == "__main__":
    for name, argv in commands():
        code, out = capture(argv)
        assert code == 0, (name, code)
        (HERE / f"{name}.json").write_text(out)
        print(name)
