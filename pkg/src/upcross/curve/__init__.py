# Polygonal curves: tau cost, verticalization and gap crossings
