"""Regenerate tests/golden/ from the current CLI.  Run only after a
deliberate output change, and review the diff."""
from pathlib import Path

from test_cli import GOLDEN, golden_cases, run_cli

if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in golden_cases():
        code, out, _ = run_cli(argv)
        assert code == 0, (argv, code)
        (GOLDEN / name).write_text(out, encoding="utf-8")
    print(f"wrote {len(list(GOLDEN.iterdir()))} files to {GOLDEN}")
