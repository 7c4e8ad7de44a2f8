# Approximation pairs, integral tests, covers and acceleration
