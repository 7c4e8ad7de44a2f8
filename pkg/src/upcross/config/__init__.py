# Configuration management
