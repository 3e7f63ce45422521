# IMPORT STATEMENT
from ytc import CapacityError, Config, PathIdealSpec, configure, get_config, setup_logging
from ytc.homology import pd_oracle
from ytc.pathideal import stanley_reisner_complex

# IMPORT STATEMENT

# Every brute-force routine is capped. The defaults come from the environment
# (YTC_LIMITS__HOCHSTER_MAX_UNIVERSE=16 and so on) or from the built-in values
print(get_config().limits.hochster_max_universe)
# 14

spec = PathIdealSpec.of(16, 1, 2)
try:
    pd_oracle(stanley_reisner_complex(spec), spec.vertices)
except CapacityError as e:
    # The error names the cap and both numbers; nothing is truncated
    print(e)

# Raise the cap for this process and try again. The Hochster sweep visits 2^16 subsets
configure(Config(limits={"hochster_max_universe": 16}))
print(pd_oracle(stanley_reisner_complex(spec), spec.vertices))

# Debug logs show progress of the long sweeps on stderr
setup_logging("DEBUG")
