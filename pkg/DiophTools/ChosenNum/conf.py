import os

"""
Configuration dictionaries shared by the ChosenNum modules
"""

"""
Exact computations: limits past which an exact evaluation is refused or
switched to floating point
"""
exact_config = {
                "harmonic_exact_limit": 10**4,
                "max_sweep_events": 2 * 10**6,
                "max_enumeration": 10**4,
                "max_level_set_arcs": 10**5}

"""
Prime sieve
"""
sieve_config = {
                "segment_odd_count": 2 * 10**6,
                "small_sieve_limit": 10**6}

"""
Floating point evaluation of the ergodic averages
"""
ergodic_config = {
                  "singular_threshold": 1e-8,
                  "bound_slack": 1e-9,
                  "geometric_base": 4,
                  "psi_base": 2}

"""
Reproducible runs
"""
run_config = {
              "default_seed": 20240619,
              "workers_env": "DIOPHTOOLS_WORKERS",
              "default_workers": 1,
              "lemma_extra_constant": 1,
              "mertens_constant": 0.2614972128476428}


def resolve_workers(workers=None):
    """
    @brief Number of worker processes for parallel loops.

    Explicit argument first, then the environment variable named in
    run_config["workers_env"], then run_config["default_workers"].
    Results never depend on the value returned here.
    """
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get(run_config["workers_env"])
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            return run_config["default_workers"]
    return run_config["default_workers"]
