#!/usr/bin/env python3
"""Independent splitmix64 / xoshiro256** reference; writes tests/data/rng_vectors.txt.

Format, one record per line:
  splitmix <seed> <out0> ... <out4>
  xoshiro <seed> <out0> ... <out7>
  stream <seed> <index> <out0> ... <out3>
  uniform01 <seed> <hex of first three doubles>
  word2 <seed> <n> <atom indices>   two atoms of weight 1/2: index = #{cumulative <= u}
"""
import sys

M = (1 << 64) - 1


def mix64(z):
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M
    return z ^ (z >> 31)


def splitmix(seed):
    s = seed
    while True:
        s = (s + 0x9E3779B97F4A7C15) & M
        yield mix64(s)


def rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & M


def xoshiro(seed):
    sm = splitmix(seed)
    s = [next(sm) for _ in range(4)]
    while True:
        out = (rotl((s[1] * 5) & M, 7) * 9) & M
        t = (s[1] << 17) & M
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = rotl(s[3], 45)
        yield out


def stream(seed, index):
    return xoshiro(mix64(seed ^ ((index * 0x9E3779B97F4A7C15) & M)))


def take(gen, n):
    return [next(gen) for _ in range(n)]


def main(path):
    seeds = [0, 1, 7, 42, 0xDEADBEEF, M]
    lines = []
    for s in seeds:
        lines.append("splitmix %d %s" % (s, " ".join(map(str, take(splitmix(s), 5)))))
    for s in seeds:
        lines.append("xoshiro %d %s" % (s, " ".join(map(str, take(xoshiro(s), 8)))))
    for s in [1, 7, 2024]:
        for i in [0, 1, 2, 1000]:
            lines.append("stream %d %d %s" % (s, i, " ".join(map(str, take(stream(s, i), 4)))))
    for s in seeds:
        g = xoshiro(s)
        vals = [(next(g) >> 11) * 2.0 ** -53 for _ in range(3)]
        lines.append("uniform01 %d %s" % (s, " ".join(v.hex() for v in vals)))
    for s, n in [(7, 3), (42, 3), (1, 12)]:
        g = xoshiro(s)
        idx = []
        for _ in range(n):
            u = (next(g) >> 11) * 2.0 ** -53
            idx.append(0 if u < 0.5 else 1)
        lines.append("word2 %d %d %s" % (s, n, " ".join(map(str, idx))))
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "rng_vectors.txt")
