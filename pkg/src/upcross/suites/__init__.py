# Randomized property suites behind the sweep command
