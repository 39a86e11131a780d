# Construction package initialization
