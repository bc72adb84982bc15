"""schublas: Schubert, key, top Lascoux polynomial toolkit."""
