#pragma once

// Generated from data/case_table.txt by tools/embed_case_table.cmake; do not edit by hand.

#include <string_view>

namespace duodecic::table {

inline constexpr std::string_view embedded_case_table = R"TABLE(# Closed-form p-integral bases of x^12 - m for p = 2, 3.
#
# One block per case, terminated by "end". Fields:
#   prime P          the prime p
#   vp V             v_p(m)
#   cond N {r,...}   m_p mod N must be one of the residues (m_p = m / p^V, sign kept)
#   index K          v_p(ind theta)
#   key H/E | PSI | PHI   second-order type: slope -H/E, residual factor PSI(Y), key polynomial PHI(x)
#   def NAME POLY    named polynomial in t = theta
#   row K EXPR       basis element EXPR / p^K; EXPR is a polynomial in t or [t^a*]NAME
#   note TEXT        provenance of corrected entries
# Coefficients may carry one symbol: m, mp (= m_p) or d (= delta, the sign with m_p = delta mod 3).

case A1
prime 2
vp 2
cond 4 {1}
index 12
key 1/6 | Y + 1 | x^6 + 2
row 0 1
row 0 t
row 0 t^2
row 0 t^3
row 0 t^4
row 0 t^5
row 2 t^6 - 2
row 2 t^7 - 2t
row 2 t^8 - 2t^2
row 2 t^9 - 2t^3
row 2 t^10 - 2t^4
row 2 t^11 - 2t^5
end

case A2
prime 2
vp 2
cond 8 {3}
index 13
key 1/6 | Y + 1 | x^6 + 2x^3 - 2
row 0 1
row 0 t
row 0 t^2
row 0 t^3
row 0 t^4
row 0 t^5
row 2 t^6 - 2t^3 + 6
row 2 t^7 - 2t^4 + 6t
row 2 t^8 - 2t^5 + 6t^2
row 2 t^9 - 2t^6 + 6t^3
row 2 t^10 - 2t^7 + 6t^4
row 3 t^11 - 2t^8 + 6t^5
end

case A3
prime 2
vp 2
cond 8 {7}
index 15
key 1/6 | Y + 1 | x^6 + 2x^3 + 2
row 0 1
row 0 t
row 0 t^2
row 0 t^3
row 0 t^4
row 0 t^5
row 2 t^6 - 2t^3 + 2
row 2 t^7 - 2t^4 + 2t
row 2 t^8 - 2t^5 + 2t^2
row 3 t^9 - 2t^6 + 2t^3
row 3 t^10 - 2t^7 + 2t^4
row 3 t^11 - 2t^8 + 2t^5
end

case A4
prime 2
vp 4
cond 4 {3}
index 21
key 1/3 | Y + 1 | x^3 - 2
row 0 1
row 0 t
row 0 t^2
row 1 t^3
row 1 t^4
row 1 t^5
row 2 t^6 + 4t^3 + 12
row 2 t^7 + 4t^4 + 12t
row 3 t^8 + 4t^5 + 12t^2
row 3 t^9 + 2t^6 + 4t^3 + 8
row 4 t^10 + 2t^7 + 4t^4 + 8t
row 4 t^11 + 2t^8 + 4t^5 + 8t^2
end

case A5
prime 2
vp 4
cond 8 {5}
index 26
key 1/3 | Y + 1 | x^3 - 2
row 0 1
row 0 t
row 0 t^2
row 1 t^3 + 6
row 1 t^4 + 6t
row 2 t^5 + 6t^2
row 3 t^6 + 4t^3 + 12
row 3 t^7 + 4t^4 + 12t
row 3 t^8 + 4t^5 + 12t^2
row 4 t^9 + 2t^6 + 4t^3 + 8
row 4 t^10 + 2t^7 + 4t^4 + 8t
row 5 t^11 + 2t^8 + 4t^5 + 8t^2
end

case A6
prime 2
vp 4
cond 8 {1}
index 28
key 1/3 | Y + 1 | x^3 - 2
row 0 1
row 0 t
row 0 t^2
row 1 t^3 + 6
row 1 t^4 + 6t
row 2 t^5 + 6t^2
row 3 t^6 + 4t^3 + 12
row 3 t^7 + 4t^4 + 12t
row 3 t^8 + 4t^5 + 12t^2
row 5 t^9 + 2t^6 + 4t^3 + 8
row 5 t^10 + 2t^7 + 4t^4 + 8t
row 5 t^11 + 2t^8 + 4t^5 + 8t^2
end

case A7
prime 2
vp 6
cond 4 {1}
index 36
key 1/2 | Y + 1 | x^2 - 2
key 1/2 | Y^2 + Y + 1 | x^4 + 2x^2 + 4
def q1 t^10 + 2t^8 + 4t^6 + 8t^4 + 16t^2 + 32
def q1p t^8 - 2t^6 + 8t^2 - 16
row 0 1
row 0 t
row 1 t^2
row 1 t^3
row 2 t^4
row 2 t^5
row 4 t^6 + 8
row 4 t^7 + 8t
row 5 q1p
row 5 t*q1p
row 6 q1
row 6 t*q1
note corrected: printed q1 = t^10 - 2t^9 + 2t^8 - 4t^6 + 8t^5 - 8t^4 + 16t^2 + 32t + 32 (the A9 polynomial), not integral here
note corrected: printed q1p = t^8 - 2t^7 + 2t^6 - 4t^5 + 8t^4 - 8t^3 + 8t^2 - 16t + 16 (the A9 polynomial), not integral here
end

case A8
prime 2
vp 6
cond 8 {3}
index 36
key 1/2 | Y + 1 | x^2 + 2x - 2
key 1/2 | Y^2 + Y + 1 | x^4 + 2x^3 - 2x^2 + 4x + 4
def q1 t^10 - 2t^9 + 6t^8 - 16t^7 + 44t^6 - 120t^5 + 328t^4 - 896t^3 + 2448t^2 - 6688t + 18272
def q1p t^8 - 2t^7 + 6t^6 - 20t^5 + 56t^4 - 168t^3 + 504t^2 - 1488t + 4432
def s t^6 - 4t^5 + 8t^4 + 4t^3 - 8
def r t^7 + t^6 - 4t^5 + 4t^4 + 4t^3 + 8t - 8
row 0 1
row 0 t
row 1 t^2
row 1 t^3
row 2 t^4
row 2 t^5
row 4 s
row 4 r
row 5 q1p
row 5 t*q1p
row 6 q1
row 6 t*q1
note corrected: printed q1 = t^10 + 2t^8 + 4t^6 + 8t^4 + 16t^2 + 32 (the A7 polynomial), not integral here
note corrected: printed q1p = t^8 - 2t^6 + 8t^2 - 16 (the A7 polynomial), not integral here
end

case A9
prime 2
vp 6
cond 8 {7}
index 39
key 1/2 | Y + 1 | x^2 + 2x + 2
key 1/2 | Y^2 + Y + 1 | x^4 + 2x^3 + 2x^2 + 4x + 4
def q1 t^10 - 2t^9 + 2t^8 - 4t^6 + 8t^5 - 8t^4 + 16t^2 + 32t + 32
def q1p t^8 - 2t^7 + 2t^6 - 4t^5 + 8t^4 - 8t^3 + 8t^2 - 16t + 16
def q3 t^7 - 2t^6 + 4t^4 - 8t^3 - 24t + 16
def q4 t^6 - 4t^5 + 8t^4 - 12t^3 - 16t + 8
row 0 1
row 0 t
row 1 t^2
row 1 t^3
row 2 t^4
row 2 t^5
row 4 q4
row 5 q3
row 5 q1p
row 6 t*q1p
row 6 q1
row 7 t*q1
note the derivation of this case prints q1 with -32t; both signs give the same lattice (they differ by an integral element)
end

case A10
prime 2
vp 8
cond 8 {1}
index 50
key 2/3 | Y + 1 | x^3 + 4
row 0 1
row 0 t
row 1 t^2
row 2 t^3 - 12
row 3 t^4 - 12t
row 3 t^5 - 12t^2
row 5 t^6 - 8t^3 + 48
row 5 t^7 - 8t^4 + 48t
row 6 t^8 - 8t^5 + 48t^2
row 8 t^9 - 4t^6 + 16t^3 - 64
row 8 t^10 - 4t^7 + 16t^4 - 64t
row 9 t^11 - 4t^8 + 16t^5 - 64t^2
note corrected: rows 9-11 printed with constant +8 in place of -64, not integral
end

case A11
prime 2
vp 8
cond 8 {5}
index 48
key 2/3 | Y + 1 | x^3 + 4
row 0 1
row 0 t
row 1 t^2
row 2 t^3 - 12
row 3 t^4 - 12t
row 3 t^5 - 12t^2
row 5 t^6 - 8t^3 + 48
row 5 t^7 - 8t^4 + 48t
row 6 t^8 - 8t^5 + 48t^2
row 7 t^9 - 4t^6 + 16t^3 - 64
row 8 t^10 - 4t^7 + 16t^4 - 64t
row 8 t^11 - 4t^8 + 16t^5 - 64t^2
end

case A12
prime 2
vp 8
cond 4 {3}
index 43
key 2/3 | Y + 1 | x^3 + 4
def q1 t^9 - 4t^6 + 16t^3 - 64
def q2 t^6 - 8t^3 + 48
def q3 t^3 - 12
row 0 1
row 0 t
row 1 t^2
row 2 q3
row 2 t*q3
row 3 t^2*q3
row 4 q2
row 5 t*q2
row 5 t^2*q2
row 6 q1
row 7 t*q1
row 8 t^2*q1
end

case A13
prime 2
vp 10
cond 4 {1}
index 56
key 5/6 | Y + 1 | x^6 + 32
row 0 1
row 0 t
row 1 t^2
row 2 t^3
row 3 t^4
row 4 t^5
row 6 t^6 - 32
row 6 t^7 - 32t
row 7 t^8 - 32t^2
row 8 t^9 - 32t^3
row 9 t^10 - 32t^4
row 10 t^11 - 32t^5
end

case A14
prime 2
vp 10
cond 8 {3}
index 57
key 5/6 | Y + 1 | x^6 + 8x^3 - 32
row 0 1
row 0 t
row 1 t^2
row 2 t^3
row 3 t^4
row 4 t^5
row 6 t^6 - 8t^3 + 96
row 7 t^7 - 8t^4 + 96t
row 7 t^8 - 8t^5 + 96t^2
row 8 t^9 - 8t^6 + 96t^3
row 9 t^10 - 8t^7 + 96t^4
row 10 t^11 - 8t^8 + 96t^5
end

case A15
prime 2
vp 10
cond 8 {7}
index 59
key 5/6 | Y + 1 | x^6 + 8x^3 + 32
row 0 1
row 0 t
row 1 t^2
row 2 t^3
row 3 t^4
row 4 t^5
row 6 t^6 - 8t^3 + 32
row 7 t^7 - 8t^4 + 32t
row 8 t^8 - 8t^5 + 32t^2
row 9 t^9 - 8t^6 + 32t^3
row 9 t^10 - 8t^7 + 32t^4
row 10 t^11 - 8t^8 + 32t^5
end

case B1
prime 3
vp 3
cond 9 {1,8}
index 18
key 1/4 | Y - d | x^4 - 3d
row 0 1
row 0 t
row 0 t^2
row 0 t^3
row 1 t^4 + 6d
row 1 t^5 + 6d*t
row 2 t^6 + 6d*t^2
row 2 t^7 + 6d*t^3
row 3 t^8 + 3d*t^4 + 9
row 3 t^9 + 3d*t^5 + 9t
row 3 t^10 + 3d*t^6 + 9t^2
row 3 t^11 + 3d*t^7 + 9t^3
end

case B2
prime 3
vp 3
cond 9 {2,4,5,7}
index 15
key 1/4 | Y - d | x^4 - 3d
row 0 1
row 0 t
row 0 t^2
row 0 t^3
row 1 t^4 + 6d
row 1 t^5 + 6d*t
row 1 t^6 + 6d*t^2
row 2 t^7 + 6d*t^3
row 2 t^8 + 3d*t^4 + 9
row 2 t^9 + 3d*t^5 + 9t
row 3 t^10 + 3d*t^6 + 9t^2
row 3 t^11 + 3d*t^7 + 9t^3
end

case B3
prime 3
vp 6
cond 9 {1}
index 36
key 1/2 | Y + 1 | x^2 + 3
key 1/2 | Y - 1 | x^2 - 3
def q1 t^10 + 3t^8 + 9t^6 + 27t^4 + 81t^2 + 243
def z1 t^7 - 15t^5 - 9t^3 - 27t
def z2 t^8 - 18t^4 - 162
row 0 1
row 0 t
row 1 t^2
row 1 t^3
row 2 t^4
row 3 t^5 - 9t
row 3 t^6 - 9t^2
row 4 z1
row 5 z2
row 5 t*z2
row 6 q1
row 6 t*q1
end

case B4
prime 3
vp 6
cond 9 {4,7}
index 32
key 1/2 | Y + 1 | x^2 + 3
key 1/2 | Y - 1 | x^2 - 3
def q1 t^10 + 3t^8 + 9t^6 + 27t^4 + 81t^2 + 243
row 0 1
row 0 t
row 1 t^2
row 1 t^3
row 2 t^4
row 2 t^5
row 3 t^6
row 3 t^7
row 4 t^8
row 5 t^9 - 18t^5 - 162t
row 5 q1
row 6 t*q1
note corrected: row 3 printed as t^2/3, a repeat of row 2
end

case B5
prime 3
vp 6
cond 9 {8}
index 36
key 1/2 | Y^2 + 1 | x^4 + 9
row 0 1
row 0 t
row 1 t^2
row 1 t^3
row 2 t^4 - 18
row 3 t^5 - 18t
row 3 t^6 - 18t^2
row 4 t^7 - 18t^3
row 5 t^8 - 9t^4 + 81
row 5 t^9 - 9t^5 + 81t
row 6 t^10 - 9t^6 + 81t^2
row 6 t^11 - 9t^7 + 81t^3
note corrected: rows 10-11 printed as t^10 - 9t^5 + 81t^2 and t^11 - 9t^6 + 81t^3, not integral
end

case B6
prime 3
vp 6
cond 9 {2,5}
index 32
key 1/2 | Y^2 + 1 | x^4 + 9
row 0 1
row 0 t
row 1 t^2
row 1 t^3
row 2 t^4 - 18
row 2 t^5 - 18t
row 3 t^6 - 18t^2
row 3 t^7 - 18t^3
row 4 t^8 - 9t^4 + 81
row 5 t^9 - 9t^5 + 81t
row 5 t^10 - 9t^6 + 81t^2
row 6 t^11 - 9t^7 + 81t^3
note corrected: rows 10-11 printed as t^10 - 9t^5 + 81t^2 and t^11 - 9t^6 + 81t^3, not integral
end

case B7
prime 3
vp 9
cond 9 {1,8}
index 51
key 3/4 | Y - d | x^4 - 27d
row 0 1
row 0 t
row 1 t^2
row 2 t^3
row 3 t^4 + 54d
row 4 t^5 + 54d*t
row 5 t^6 + 54d*t^2
row 5 t^7 + 54d*t^3
row 7 t^8 + 27d*t^4 + 729
row 7 t^9 + 27d*t^5 + 729t
row 8 t^10 + 27d*t^6 + 729t^2
row 9 t^11 + 27d*t^7 + 729t^3
note corrected: rows 5-8 printed with -54d; the key polynomial gives +54d, the printed sign is not integral
end

case B8
prime 3
vp 9
cond 9 {2,4,5,7}
index 48
key 3/4 | Y - d | x^4 - 27d
row 0 1
row 0 t
row 1 t^2
row 2 t^3
row 3 t^4 + 54d
row 4 t^5 + 54d*t
row 4 t^6 + 54d*t^2
row 5 t^7 + 54d*t^3
row 6 t^8 + 27d*t^4 + 729
row 7 t^9 + 27d*t^5 + 729t
row 8 t^10 + 27d*t^6 + 729t^2
row 8 t^11 + 27d*t^7 + 729t^3
note corrected: rows 5-8 printed with -54d; the key polynomial gives +54d, the printed sign is not integral
end

case T2-3a
prime 3
vp 0
cond 9 {1,8}
index 4
def h t^8 + m*t^4 + 1
row 0 1
row 0 t
row 0 t^2
row 0 t^3
row 0 t^4
row 0 t^5
row 0 t^6
row 0 t^7
row 1 h
row 1 t*h
row 1 t^2*h
row 1 t^3*h
end

case T2-3b
prime 3
vp 0
cond 9 {2,4,5,7}
index 0
row 0 1
row 0 t
row 0 t^2
row 0 t^3
row 0 t^4
row 0 t^5
row 0 t^6
row 0 t^7
row 0 t^8
row 0 t^9
row 0 t^10
row 0 t^11
end

case T3-2a
prime 2
vp 0
cond 8 {1}
index 9
def g t^9 + t^6 + t^3 + 1
row 0 1
row 0 t
row 0 t^2
row 0 t^3
row 0 t^4
row 0 t^5
row 1 t^6 - 1
row 1 t^7 - t
row 1 t^8 - t^2
row 2 g
row 2 t*g
row 2 t^2*g
end

case T3-2b
prime 2
vp 0
cond 8 {5}
index 6
row 0 1
row 0 t
row 0 t^2
row 0 t^3
row 0 t^4
row 0 t^5
row 1 t^6 - 1
row 1 t^7 - t
row 1 t^8 - t^2
row 1 t^9 - t^3
row 1 t^10 - t^4
row 1 t^11 - t^5
end

case T3-2c
prime 2
vp 0
cond 4 {3}
index 0
row 0 1
row 0 t
row 0 t^2
row 0 t^3
row 0 t^4
row 0 t^5
row 0 t^6
row 0 t^7
row 0 t^8
row 0 t^9
row 0 t^10
row 0 t^11
end
)TABLE";

}  // namespace duodecic::table
