# Geometry package
