#!/usr/bin/env python3
"""Regenerates tests/data/temporal-10k.txt.

Deterministic SNAP-style temporal edge list: 10,000 `src dst timestamp`
lines over ~1,500 vertices, with duplicate pairs and occasional self-loops
like real collection dumps. Timestamps are non-decreasing with ties.
"""

import pathlib

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return self.next() % bound


def main() -> None:
    rng = SplitMix64(20240517)
    n_lines = 10_000
    n_vertices = 1_500
    timestamp = 1_217_567_877

    lines = [
        "# synthetic temporal network, SNAP layout",
        "# src dst unixts",
        "# 10000 temporal edges",
    ]
    recent: list[tuple[int, int]] = []
    for _ in range(n_lines):
        roll = rng.below(100)
        if recent and roll < 15:  # duplicate of an earlier interaction
            u, v = recent[rng.below(len(recent))]
        elif roll < 16:  # rare self-interaction
            u = v = rng.below(n_vertices)
        else:
            u = rng.below(n_vertices)
            v = rng.below(n_vertices)
            if u == v:
                v = (v + 1) % n_vertices
        recent.append((u, v))
        if len(recent) > 2_000:
            recent.pop(0)
        # Raw ids are spread out so loaders must compact them.
        lines.append(f"{u * 7 + 3} {v * 7 + 3} {timestamp}")
        timestamp += rng.below(4)

    out = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data" / "temporal-10k.txt"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out} ({n_lines} entries)")


if __name__ == "__main__":
    main()
