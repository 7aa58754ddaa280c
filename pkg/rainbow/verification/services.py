import logging

from rainbow.colorings.coloring import EdgeColoring
from rainbow.colorings.coloring import balance_profile
from rainbow.verification.bitmasks import check_color_limit
from rainbow.verification.cliques import find_rainbow_clique
from rainbow.verification.reports import CertificateVerdict
from rainbow.verification.sampling import DEFAULT_CHUNK
from rainbow.verification.sampling import sample_verify

logger = logging.getLogger(__name__)


def verify_certificate(  # noqa: PLR0913
    coloring: EdgeColoring,
    q: int,
    *,
    threads: int = 1,
    samples: int | None = None,
    seed: int | None = None,
    chunk: int = DEFAULT_CHUNK,
) -> CertificateVerdict:
    """Check balance exactly and rainbow-K_q freeness.

    The rainbow check is an exhaustive scan unless ``samples`` is given, in
    which case ``samples`` seeded random q-subsets are tested instead.
    """
    check_color_limit(coloring)
    profile = balance_profile(coloring)
    if samples is None:
        report = find_rainbow_clique(coloring, q, threads=threads)
    else:
        if seed is None:
            msg = "sampled verification needs an explicit seed"
            raise ValueError(msg)
        report = sample_verify(
            coloring, q, samples, seed, threads=threads, chunk=chunk,
        )
    verdict = CertificateVerdict(
        balanced=profile.is_uniform,
        uniform_t=profile.uniform_t,
        rainbow_free=not report.found,
        clique_size=q,
        report=report,
        unbalanced_vertices=tuple(profile.unbalanced_vertices()),
    )
    logger.info(
        "Certificate K_%d, %d colors, q=%d: balanced=%s rainbow_free=%s",
        coloring.n,
        coloring.ell,
        q,
        verdict.balanced,
        verdict.rainbow_free,
    )
    return verdict
