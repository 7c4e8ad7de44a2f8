# Logging configuration
