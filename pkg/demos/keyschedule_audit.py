#!/usr/bin/env python3
# Column classes of the 11 round keys evolve by four chained XORs per
# transition; audit them for the classic example key and show the
# trajectory.

from aeseqc import aes, audit_schedule_classes, key_class_record

key = bytes.fromhex("2b7e151628aed2a6abf7158809cf4f3c")
schedule = aes.expand_key(key)

print("round  EK0 EK1 EK2 EK3   EG")
for rnd in range(11):
    record = key_class_record(schedule, rnd)
    ek = " ".join(f"{int(v):02x}" for v in record.ek)
    eg = f"{record.eg:02x}" if record.eg is not None else "--"
    print(f"{rnd:>5}  {ek}   {eg}")

report = audit_schedule_classes(key)
print("\ntransition checks:", sum(t["pass"] for t in report), "of", len(report), "pass")
for t in report:
    print(f"  round {t['round']} -> {t['round'] + 1}: predicted {t['predicted']} "
          f"actual {t['actual']}")
