#!/usr/bin/env python3
"""Walk through partitions of a small set and their record statistics.

Every set partition of {1,..,n} is a word w1..wn (wi = block of element i,
blocks numbered by first appearance).  Records are strict left-to-right
maxima; swrec adds up position * value over them.
"""

from partition_records import (
    blocks_from_rgs,
    enumerate_rgs,
    records,
    srec,
    swrec,
    swrec_histogram,
)

n = 4
print(f"All {sum(1 for _ in enumerate_rgs(n))} partitions of [{n}]:\n")
print(f"{'word':6} {'blocks':22} {'records':22} {'srec':>4} {'swrec':>5}")
for w in enumerate_rgs(n):
    word = "".join(map(str, w))
    blocks = " ".join("{" + ",".join(map(str, b)) + "}" for b in blocks_from_rgs(w))
    recs = " ".join(f"(p={p},v={v})" for p, v in records(w))
    print(f"{word:6} {blocks:22} {recs:22} {srec(w):>4} {swrec(w):>5}")

print("\nHistogram of swrec over all partitions of [4]:")
for value, count in sorted(swrec_histogram(n).items()):
    print(f"  swrec = {value:2}: {count} partition(s)")

print("\nThe word 1 2 1 1 3 2 has records (1,1), (2,2), (5,3),")
print(f"so swrec = 1*1 + 2*2 + 5*3 = {swrec((1, 2, 1, 1, 3, 2))}.")
