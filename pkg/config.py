import os


def _env_flag(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ('1', 'true', 'yes', 'on')


class Config:
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')

    # Desk-scale guards for enumerate / verify
    MAX_N = int(os.getenv('SHI_MAX_N', '5'))
    MAX_M = int(os.getenv('SHI_MAX_M', '3'))

    # Largest absolute integer accepted in CLI encodings (and largest partition size)
    MAX_ENTRY = int(os.getenv('SHI_MAX_ENTRY', '10000'))

    # Oracle BFS: default radius is m*n(n-1)/2 + n, plus this slack
    ORACLE_RADIUS_SLACK = int(os.getenv('SHI_ORACLE_SLACK', '0'))
    ORACLE_MAX_RADIUS = int(os.getenv('SHI_ORACLE_MAX_RADIUS', '40'))

    REGION_CACHE_PATH = os.getenv('SHI_REGION_CACHE', 'region_cache.json')
    USE_REGION_CACHE = _env_flag('SHI_USE_CACHE', 'false')

    RANDOM_TRIALS = int(os.getenv('SHI_RANDOM_TRIALS', '10000'))
    RANDOM_SEED = int(os.getenv('SHI_RANDOM_SEED', '20240601'))

    SVG_SCALE = int(os.getenv('SHI_SVG_SCALE', '90'))

    MAX_SUGGESTIONS = 3
