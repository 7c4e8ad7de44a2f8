# Anti-slalom game: gates, slope bands and the moving-line sweep
