"""Help text definitions for the padic-ell CLI."""

# Main CLI help text shown with --help or when no command is provided
MAIN_HELP = """
                 _ _                 _ _
   _ __  __ _ __| (_)__ ___ ___ ___| | |
  | '_ \\/ _` / _` | / _|___/ -_)___| | |
  | .__/\\__,_\\__,_|_\\__|   \\___|   |_|_|
  |_|   p-adic L-functions of elliptic curves

Usage:
  padic-ell [--debug] [--config <path>] <command> [options]

Commands:
  series       Compute L_p(E, alpha, psi, T) as a truncated power series in T.
  taylor       Compute the Taylor coefficients of L_p(E, alpha, psi, s) at s = 1.
  verify       Run one of the checks: fe, fe-s, mains, mains-general, main-T, mu-bar,
               parity, basechange.
  basechange   Compute L_p(E/K, alpha, T) for an abelian field K given by its characters.
  cache        Build, load, list or clear cached modular symbols.
  curves       List the bundled curve table.
  help         Show this help message.

Example Usage:
  padic-ell series --curve 11a1 --p 5 --psi triv --level 4
  padic-ell verify fe --curve 11a1 --p 5 --level 4
  padic-ell verify mains --curve 37a1 --p 5 --level 5 --format pretty
  padic-ell basechange --curve 11a1 --p 5 --field "K=[kron:-4]" --level 5
  padic-ell series --curve 11a1 --p 5 7 --psi triv teich:2 --jobs 4

Exit codes:
  0  success (or check passed)
  1  bad input
  2  not enough precision to decide
  3  check failed

For more detailed information:
  padic-ell <command> --help
"""

SERIES_HELP = """
Series Command Help

Usage: padic-ell series --curve <label|a1,a2,a3,a4,a6;N> --p <p> [<p> ...]
                        [--psi <text> ...] [--alpha unit|root1|root2]
                        [--level <n>] [--t-order <k>] [--output <path>] [--format json|csv|pretty]
                        [--jobs <N>]

Description:
  Computes the level-n Riemann sums of the measure attached to (E, alpha, psi) and
  reports the coefficients of T^0 .. T^t_order with their certified precision.
  Characters are written "triv", "kron:D", "teich:j" or "kron:D*teich:j".
  Every (p, psi) pair is an independent job; --jobs runs them in parallel.
"""

TAYLOR_HELP = """
Taylor Command Help

Usage: padic-ell taylor --curve <curve> --p <p> [--psi <text>] [--level <n>] [--t-order <k>]

Description:
  Re-expands the T-series in u = s - 1 through T = kappa^u - 1, kappa = 1 + p.
"""

VERIFY_HELP = """
Verify Command Help

Usage: padic-ell verify <check> --curve <curve> --p <p> [--psi <text>] [--level <n>]
                        [--t-order <k>] [--field <K>]

Checks:
  fe             functional equation in T
  fe-s           functional equation on the Taylor coefficients in s - 1
  mains          a_{m+1} = -(1/2) log<Q> a_m
  mains-general  the odd-k relations up to k = 3
  main-T         c_{m+1} = -(c_m/2)(log<Q>/log kappa + m)
  mu-bar         mu(psi) = mu(psi-bar) with the mechanism checks
  parity         (-1)^m = -c_Q psi(-Q), and w_E = -c_N
  basechange     the relations for L_p(E/K); needs --field

Exit codes: 0 pass, 3 fail, 2 indeterminate.
"""

BASECHANGE_HELP = """
Basechange Command Help

Usage: padic-ell basechange --curve <curve> --p <p> --field "K=[kron:-4]" [--level <n>]

Description:
  Closes the listed characters under multiplication and multiplies the twisted series.
"""

CACHE_HELP = """
Cache Command Help

Usage: padic-ell cache build|load --curve <curve>
       padic-ell cache list|clear

Description:
  Cached symbol maps live under $PADIC_ELL_CACHE (default ./.padic_ell_cache) and are
  guarded by a checksum; a corrupt entry exits with code 1.
"""

CURVES_HELP = """
Curves Command Help

Usage: padic-ell curves list [--dimensions] [--format json|csv|pretty]

Description:
  Lists the bundled curves; --dimensions adds dim S_2(Gamma0(N)) for each conductor.
"""
