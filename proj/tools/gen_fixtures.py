#!/usr/bin/env python3
"""Regenerates the standard-algorithm fixture files under tests/fixtures.

Uses hashlib and the `cryptography` package (OpenSSL-backed) as independent
oracles for SHA-1, AES-192 and P-256 scalar multiplication. Run from the
repo root:  python3 tools/gen_fixtures.py
"""

import hashlib
import os
import random

from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes
from cryptography.hazmat.primitives.asymmetric import ec

FIXDIR = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")


def write_sha1():
    rng = random.Random(0x5348412D31)
    inputs = [b"", b"abc", b"The quick brown fox jumps over the lazy dog",
              b"a" * 64, b"a" * 1000]
    for ln in (1, 20, 55, 56, 63, 64, 65, 128, 500):
        inputs.append(bytes(rng.randrange(256) for _ in range(ln)))
    with open(os.path.join(FIXDIR, "sha1_vectors.txt"), "w") as f:
        f.write("# input_hex <tab> digest_hex (hashlib generated)\n")
        for m in inputs:
            f.write(f"{m.hex()}\t{hashlib.sha1(m).hexdigest()}\n")


def write_aes_ecb():
    rng = random.Random(0xAE5192)
    rows = []
    # FIPS-197 appendix C.2 example first.
    key = bytes(range(24))
    pt = bytes.fromhex("00112233445566778899aabbccddeeff")
    rows.append((key, pt))
    for _ in range(24):
        rows.append((bytes(rng.randrange(256) for _ in range(24)),
                     bytes(rng.randrange(256) for _ in range(16))))
    with open(os.path.join(FIXDIR, "aes192_vectors.txt"), "w") as f:
        f.write("# key_hex <tab> plaintext_hex <tab> ciphertext_hex (12-round AES-192 ECB)\n")
        for key, pt in rows:
            enc = Cipher(algorithms.AES(key), modes.ECB()).encryptor()
            ct = enc.update(pt) + enc.finalize()
            f.write(f"{key.hex()}\t{pt.hex()}\t{ct.hex()}\n")


def write_aes_ctr():
    rng = random.Random(0xC7E0)
    with open(os.path.join(FIXDIR, "aes192_ctr_vectors.txt"), "w") as f:
        f.write("# key_hex <tab> iv_hex <tab> plaintext_hex <tab> ciphertext_hex\n")
        for ln in (0, 1, 15, 16, 17, 64, 100, 1000):
            key = bytes(rng.randrange(256) for _ in range(24))
            iv = bytes(rng.randrange(256) for _ in range(16))
            pt = bytes(rng.randrange(256) for _ in range(ln))
            enc = Cipher(algorithms.AES(key), modes.CTR(iv)).encryptor()
            ct = enc.update(pt) + enc.finalize()
            f.write(f"{key.hex()}\t{iv.hex()}\t{pt.hex()}\t{ct.hex()}\n")


def write_p256_mul():
    rng = random.Random(0x50323536)
    order = 0xFFFFFFFF00000000FFFFFFFFFFFFFFFFBCE6FAADA7179E84F3B9CAC2FC632551
    privs = [1, 2, 3, 0xDEADBEEF, order - 1]
    privs += [rng.randrange(1, order) for _ in range(10)]
    with open(os.path.join(FIXDIR, "p256_mul_vectors.txt"), "w") as f:
        f.write("# priv_hex <tab> pub_x_hex <tab> pub_y_hex (cryptography/OpenSSL generated)\n")
        for d in privs:
            pub = ec.derive_private_key(d, ec.SECP256R1()).public_key().public_numbers()
            f.write(f"{d:064x}\t{pub.x:064x}\t{pub.y:064x}\n")


if __name__ == "__main__":
    os.makedirs(FIXDIR, exist_ok=True)
    write_sha1()
    write_aes_ecb()
    write_aes_ctr()
    write_p256_mul()
    print("fixtures written to", os.path.abspath(FIXDIR))
