# config.py
# Konfigurasi batas enumerasi dan parameter verifikasi

# Exact arithmetic range (signed 64-bit)
MAX_EXACT_INT = 2**63 - 1
MAX_FACTORIAL_N = 20  # 21! sudah melewati MAX_EXACT_INT

# Family _nw verification
FAMILY_MIN_N = 4
FAMILY_MAX_N = 9  # verifikasi exhaustive default, C(9,2) = 36 vertex

# Batas jumlah reduced word untuk permutasi di luar family
WORD_COUNT_CAP = 250_000

# Brute-force isomorphism (backtracking)
BRUTE_ISO_MAX_VERTICES = 12

# Generating series audit
SERIES_MAX_N = 12

# Simplex kΔ₂
SIMPLEX_MAX_K = 10
SIMPLEX_WEIGHT_VECTOR = (1, 2)  # vektor z tetap

# verify all
VERIFY_MAX_N = 9
VERIFY_CHAIN_MAX_N = 8       # rantai isomorfisme n = 4..8
VERIFY_COVER_MAX_N = 7       # cek cover dua arah n <= 7
VERIFY_BRUTE_ISO_MAX_N = 6   # oracle brute isomorphism n = 4..6
VERIFY_BRUTE_ISO_BOUND = 15  # C(6,2) vertex
VERIFY_PROPERTIES_MAX_N = 20

# Format teks
DIGIT_KEY_MAX_N = 10   # word ditulis sebagai digit string jika n <= 10
DIGIT_PERM_MAX_N = 9   # permutasi "51342" diterima jika n <= 9

# Edge kinds
EDGE_KINDS = ['braid', 'commutation', 'cover']
