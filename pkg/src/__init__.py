"""graphfactor: closed-form random-walk matrices, SVD embeddings and link-prediction evaluation."""
