# Graphs package initialization
