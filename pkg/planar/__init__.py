# Planar package initialization
