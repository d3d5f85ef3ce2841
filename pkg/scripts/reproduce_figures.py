"""Write the data of all twelve figure presets into one directory."""

import argparse
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from cohphase.main import main
from cohphase.models.presets import FIGURE_PRESETS


def reproduce_figures(out_dir: Path) -> int:
    """Run every preset through its sub-command; return the worst exit code."""
    out_dir.mkdir(parents=True, exist_ok=True)
    print(f"Writing figure data to {out_dir}\n")

    worst = 0
    for name, preset in sorted(FIGURE_PRESETS.items(), key=lambda item: int(item[0][3:])):
        path = out_dir / f"{name}.csv"
        code = main([preset["command"].value, "--preset", name, "-o", str(path)])
        status = "ok" if code == 0 else f"exit {code}"
        print(f"  {name:<6} {preset['description']:<55} {status}")
        worst = max(worst, code)

    print("\nDone." if worst == 0 else "\nSome presets failed.")
    return worst


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out_dir", nargs="?", type=Path, default=Path("figures"))
    sys.exit(reproduce_figures(parser.parse_args().out_dir))
