# # Steinitz numbers
#
# A Steinitz (supernatural) number is a formal product of prime powers where
# an exponent may be infinite.  Ordinary positive integers sit inside as the
# finitely supported numbers with finite exponents.

from lmalg.steinitz import INF, TOP, SteinitzNumber, st_lcm_of_set

a = SteinitzNumber(12)
b = SteinitzNumber(18)
print("12 * 18 =", a * b)
print("lcm(12, 18) =", a.lcm(b), "  gcd =", a.gcd(b))

# Multiplication absorbs infinity: once a prime has exponent inf, multiplying
# by more copies of it changes nothing.

two_inf = SteinitzNumber({2: INF})
print("2^inf * 12 =", two_inf * a)
print("4 divides 2^inf:", SteinitzNumber(4).divides(two_inf), "  3 divides 2^inf:", SteinitzNumber(3).divides(two_inf))

# The lcm of a sequence that keeps multiplying by 6 has both 2 and 3 unbounded.

print("lcm of 6, 36, 216, ... =", st_lcm_of_set([6], tail=6))

# Divisibility makes the Steinitz numbers a complete lattice; the top element
# I has every exponent infinite.

print("everything divides I:", all(SteinitzNumber(n).divides(TOP) for n in range(1, 100)))
