from pathlib import Path

import vecgroupoid

SAMPLES = Path(vecgroupoid.__file__).parent / "samples"
DATA = Path(__file__).parent / "data"

GROUPOID_SAMPLES = sorted(p for p in SAMPLES.glob("*.json")
                          if not p.name.startswith(("anchor_", "factorize_")))
