"""
Centralized configuration management for the szlenk package.

This module loads the optional environment variables from a .env file
and makes them available as constants for the rest of the package.
"""

import os
import logging
from dotenv import load_dotenv

# Load environment variables from a .env file.
load_dotenv()

logger = logging.getLogger(__name__)

# --- General Configuration ---
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper()

# --- Ordinal Arithmetic Configuration ---
# Width of the Cantor-normal-form coefficient type. Never narrower than 64 bits.
COEFFICIENT_BITS = int(os.getenv("SZLENK_COEFFICIENT_BITS", 64))
if COEFFICIENT_BITS < 64:
    logger.warning(f"SZLENK_COEFFICIENT_BITS={COEFFICIENT_BITS} is below 64. Using 64-bit coefficients.")
    COEFFICIENT_BITS = 64

MAX_COEFFICIENT = 2**COEFFICIENT_BITS - 1

# Largest number of normal-form terms a power may produce; (w+1)^n alone has n+1.
MAX_TERMS = int(os.getenv("SZLENK_MAX_TERMS", 10000))

# --- Rewriting Configuration ---
# Guard on normalize(); every rule strictly decreases the termination measure,
# so hitting this limit means a malformed rule table.
MAX_REWRITE_STEPS = int(os.getenv("SZLENK_MAX_REWRITE_STEPS", 10000))
