# Radial package
