from src.oracle.brute_force import brute_force_avoidance_gf, brute_force_gf, enumerate_words
