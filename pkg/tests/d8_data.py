"""Pinned matrices for the order-8 extended Dynkin case used across tests."""

# 9x9 walk matrix of the extended Dynkin tree at n = 8, every entry pinned
W8_ROWS = [
    [1, 1, 3, 4, 11, 16, 43, 64, 171],
    [1, 1, 3, 4, 11, 16, 43, 64, 171],
    [1, 3, 4, 11, 16, 43, 64, 171, 256],
    [1, 2, 5, 8, 21, 32, 85, 128, 341],
    [1, 2, 4, 10, 16, 42, 64, 170, 256],
    [1, 2, 5, 8, 21, 32, 85, 128, 341],
    [1, 3, 4, 11, 16, 43, 64, 171, 256],
    [1, 1, 3, 4, 11, 16, 43, 64, 171],
    [1, 1, 3, 4, 11, 16, 43, 64, 171],
]

# same case after trimming and zero-padding: first/last rows and last two
# columns cleared, the trimmed block kept in rows 2..8, columns 1..7
W8_PRIME_ROWS = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 3, 4, 11, 16, 43, 0, 0],
    [1, 3, 4, 11, 16, 43, 64, 0, 0],
    [1, 2, 5, 8, 21, 32, 85, 0, 0],
    [1, 2, 4, 10, 16, 42, 64, 0, 0],
    [1, 2, 5, 8, 21, 32, 85, 0, 0],
    [1, 3, 4, 11, 16, 43, 64, 0, 0],
    [1, 1, 3, 4, 11, 16, 43, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
]

W8_FACTORS = (1, 1, 1, 7)
W8_RANK = 4
