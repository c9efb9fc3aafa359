"""Deterministic primality testing for 64-bit inputs."""

# Miller-Rabin with these bases is exact below 3.3e24, which covers 2**64.
_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 0 or n >= 1 << 64:
        raise ValueError("is_prime expects a nonnegative 64-bit integer")
    if n < 2:
        return False
    for b in _BASES:
        if n % b == 0:
            return n == b
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in(lo: int, hi: int) -> list[int]:
    return [n for n in range(max(lo, 0), hi + 1) if is_prime(n)]
