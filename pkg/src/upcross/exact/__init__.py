# Exact scalar and profile kernel
