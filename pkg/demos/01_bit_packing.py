"""Bit-level packing: the substrate both matrix codecs build on.

A BitBuffer is a growable sequence of 64-bit words addressed by absolute
bit position.  Fields of 1..64 bits are written at any offset; a field
that does not fit in the remaining bits of a word continues into the low
bits of the next one.
"""

from ccmatrix import BitBuffer, bit_length

print("=== writing fields ===")
buf = BitBuffer()
buf.write_field(0, 10, 900)
print(f"900 in 10 bits at position 0 -> word 0 = {buf.words[0]:064b}")

buf.write_field(10, 10, 1023)
print(f"1023 appended at position 10 -> word 0 = {buf.words[0]:064b}")

print()
print("=== a field straddling two words ===")
buf2 = BitBuffer()
buf2.write_field(60, 10, 700)
print(f"700 = {700:010b} written at bit 60")
print(f"word 0 (top four bits): ...{buf2.words[0] >> 60:04b}")
print(f"word 1 (low six bits):  {buf2.words[1]:06b}")
print(f"read back across the boundary: {buf2.read_field(60, 10)}")

print()
print("=== bit lengths ===")
for n in (0, 1, 20, 256, 900, 1023, 2**63):
    print(f"bit_length({n}) = {bit_length(n)}")

print()
print("=== overwriting a field leaves its neighbours alone ===")
buf3 = BitBuffer()
buf3.write_field(0, 12, 0b111111111111)
buf3.write_field(4, 4, 0)
print(f"after clearing bits 4..7: {buf3.words[0]:012b}")
