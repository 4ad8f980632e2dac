import os

from dotenv import load_dotenv

load_dotenv(dotenv_path=os.path.abspath(".env"))


class Config:
    EDS_MAX_WEIGHT = int(os.getenv("FMZV_MAX_WEIGHT", "9").strip())
    MATRIX_MAX_WEIGHT = int(os.getenv("FMZV_MATRIX_MAX_WEIGHT", "16").strip())
    LOG_LEVEL = os.getenv("FMZV_LOG_LEVEL", "INFO").strip().upper()

    SCHEMA_VERSION = 1
