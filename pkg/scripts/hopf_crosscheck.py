"""Compare Hilbert(I_{a,b}) with the deformed bottom-Hochschild Hopf series and report the shift."""
import argparse
import json
from dataclasses import asdict, dataclass

from skein.homseries import hopf_crosscheck, hopf_parity_series, mono_text


@dataclass
class Config:
    pairs: tuple = ((1, 1), (2, 1), (2, 2))
    qmax: int | None = None
    vmax: int = 3


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--pair", action="append", help="a,b (repeatable)")
    p.add_argument("--qmax", type=int)
    p.add_argument("--vmax", type=int, default=3)
    p.add_argument("--json", action="store_true")
    args = p.parse_args()
    pairs = tuple(tuple(int(x) for x in s.split(",")) for s in args.pair) if args.pair else Config.pairs
    cfg = Config(pairs, args.qmax, args.vmax)
    rows = []
    for a, b in cfg.pairs:
        r = hopf_crosscheck(a, b, cfg.qmax, cfg.vmax)
        rows.append({"a": a, "b": b, "equal": r.equal, "shift": mono_text(r.shift), "checked": r.checked,
                     "series": str(hopf_parity_series(a, b, hochschild_bottom=True, deformed=True))})
    if args.json:
        print(json.dumps({"schema": 1, "config": asdict(cfg), "results": rows}, indent=1))
    else:
        for r in rows:
            print(f"(a,b)=({r['a']},{r['b']}): equal={r['equal']} shift={r['shift']} weights={r['checked']}")
            print(f"    {r['series']}")


if __name__ == "__main__":
    main()
