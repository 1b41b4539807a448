import logging
import time
from datetime import datetime
from multiprocessing import Pool
from typing import Dict, List, Optional, Sequence, Tuple

from app.bounds.numerics import Number, normalize_alpha
from app.bounds.regime import require_regime
from app.bounds.theorems import BoundResult, bounds_for
from app.enumeration.free_trees import free_tree_count, free_trees
from app.errors import BoundDomainError, CeilingExceededError
from app.families.kinds import FamilyKind, FamilyTag
from app.families.recognizer import is_member
from app.graph.canonical import canonical_code
from app.invariants.domination import domination_number
from app.invariants.randic import zeroth_order_general_randic
from app.pipeline.bucket_stats import BucketKey, BucketStats, merge_bucket_maps
from app.reporting.report import BoundCheck, ReportRow, VerificationReport
from config import DEFAULT_ALPHA_GRID, DEFAULT_JOBS, get_max_order

logger = logging.getLogger(__name__)

ShardTask = Tuple[int, Tuple[int, int], Tuple[Number, ...]]


def _evaluate_shard(task: ShardTask) -> Dict[BucketKey, BucketStats]:
    """Worker: evaluate every tree of one shard against every grid exponent"""
    n, shard, alphas = task
    buckets: Dict[BucketKey, BucketStats] = {}
    bound_cache: Dict[Tuple[int, int], List[BoundResult]] = {}

    for tree in free_trees(n, shard=shard):
        code = str(canonical_code(tree))
        gamma = domination_number(tree).gamma

        membership = {}
        for bound in bounds_for(n, gamma, alphas[0]):
            tag = FamilyTag.for_theorem(bound.theorem_id)
            membership[bound.theorem_id.value] = is_member(tree, FamilyKind(tag, n, gamma))

        for position, alpha in enumerate(alphas):
            key = (position, gamma)
            if key not in bound_cache:
                bound_cache[key] = bounds_for(n, gamma, alpha)
            value = zeroth_order_general_randic(tree, alpha)
            checks = [
                (b.theorem_id.value, b.admits(value), b.attained_by(value), membership[b.theorem_id.value])
                for b in bound_cache[key]
            ]
            buckets.setdefault(key, BucketStats()).add(code, value, checks)

    return buckets


def _finalize_row(gamma: int, stats: BucketStats, bounds: List[BoundResult]) -> ReportRow:
    checks = []
    for bound in bounds:
        tally = stats.theorems[bound.theorem_id.value]
        upper = bound.direction.value == 'upper'
        checks.append(BoundCheck(
            theorem_id=bound.theorem_id.value,
            value=bound.value,
            direction=bound.direction.value,
            satisfied=not tally.violators,
            attained=bool(tally.achievers),
            extremal_value=stats.max_value if upper else stats.min_value,
            equality_count=len(tally.achievers),
            equality_achiever_codes=sorted(tally.achievers),
            family_codes=sorted(tally.members),
            family_match=tally.achievers == tally.members,
            counterexample_codes=sorted(tally.violators),
        ))

    return ReportRow(
        gamma=gamma,
        tree_class_count=stats.tree_count,
        min_value=stats.min_value,
        max_value=stats.max_value,
        applicable_bounds=checks,
        equality_achiever_codes=sorted(set().union(*(c.equality_achiever_codes for c in checks))),
        family_match=all(c.family_match for c in checks),
        counterexample_codes=sorted(set().union(*(c.counterexample_codes for c in checks))),
    )


class VerificationPipeline:
    """Exhaustive certification of the bounds over all free trees of each order"""

    def __init__(self, jobs: Optional[int] = None):
        self.jobs = max(1, jobs if jobs is not None else DEFAULT_JOBS)

        # Pipeline stats
        self.last_run = None
        self.last_results: Optional[Dict] = None
        self.failures: Dict[int, str] = {}

    def _validate(self, min_order: int, max_order: int, alphas: Sequence) -> Tuple[Number, ...]:
        ceiling = get_max_order()
        if max_order > ceiling:
            raise CeilingExceededError(
                f"max order {max_order} exceeds ceiling {ceiling} (set TREEBOUND_MAX_ORDER to raise it)"
            )
        if min_order < 2 or min_order > max_order:
            raise BoundDomainError(f"Need 2 <= min order <= max order, got [{min_order}, {max_order}]")
        grid = tuple(normalize_alpha(a) for a in alphas)
        for alpha in grid:
            require_regime(alpha)
        return grid

    def verify(self, min_order: int, max_order: int,
               alphas: Optional[Sequence] = None) -> List[VerificationReport]:
        """Reports ordered by n, then by position in the exponent grid"""
        grid = self._validate(min_order, max_order, DEFAULT_ALPHA_GRID if alphas is None else alphas)
        start_time = time.time()
        self.failures = {}
        reports: List[VerificationReport] = []

        logger.info(f"🚀 Verifying orders {min_order}..{max_order} on α grid {list(grid)} with {self.jobs} worker(s)")
        if not grid:
            logger.warning("⚠️ Empty α grid, nothing to verify")

        for n in range(min_order, max_order + 1):
            if not grid:
                break
            try:
                reports.extend(self._verify_order(n, grid))
            except Exception as e:
                logger.error(f"❌ Verification of n={n} failed: {e}")
                self.failures[n] = str(e)

        processing_time = time.time() - start_time
        violations = sum(r.violations() for r in reports)
        self.last_run = datetime.now()
        self.last_results = {
            'success': violations == 0 and not self.failures,
            'orders': [min_order, max_order],
            'alphas': list(grid),
            'report_count': len(reports),
            'violations': violations,
            'failures': dict(self.failures),
            'processing_time': round(processing_time, 2),
            'timestamp': self.last_run.isoformat(),
        }

        status = '✅' if self.last_results['success'] else '❌'
        logger.info(f"{status} Verification finished in {processing_time:.2f}s: {len(reports)} reports, {violations} violations")
        return reports

    def _verify_order(self, n: int, grid: Tuple[Number, ...]) -> List[VerificationReport]:
        start_time = time.time()

        # Step 1: evaluate shards
        tasks = [(n, (index, self.jobs), grid) for index in range(self.jobs)]
        logger.info(f"🌲 n={n} Step 1: evaluating {len(tasks)} shard(s)...")
        if self.jobs == 1:
            partials = [_evaluate_shard(tasks[0])]
        else:
            with Pool(self.jobs) as pool:
                partials = pool.map(_evaluate_shard, tasks)

        # Step 2: merge
        buckets = merge_bucket_maps(partials)
        tree_count = sum(stats.tree_count for (position, _), stats in buckets.items() if position == 0)
        expected = free_tree_count(n)
        if tree_count != expected:
            raise RuntimeError(f"γ buckets hold {tree_count} trees, enumeration has {expected}")
        logger.info(f"📊 n={n} Step 2: {tree_count} trees in {len(buckets) // len(grid)} γ bucket(s)")

        # Step 3: finalize per exponent
        runtime_ms = int(round((time.time() - start_time) * 1000))
        reports = []
        for position, alpha in enumerate(grid):
            gammas = sorted(g for (p, g) in buckets if p == position)
            rows = [_finalize_row(g, buckets[(position, g)], bounds_for(n, g, alpha)) for g in gammas]
            report = VerificationReport(order=n, alpha=alpha, tree_count=tree_count, rows=rows, runtime_ms=runtime_ms)
            if not report.passed():
                logger.warning(f"⚠️ n={n} α={alpha}: {report.violations()} violation(s)")
            reports.append(report)
        return reports

    def get_system_status(self) -> Dict:
        """Summary of the last run"""
        return {
            'last_run': self.last_run.isoformat() if self.last_run else None,
            'jobs': self.jobs,
            'max_order': get_max_order(),
            'system_health': 'healthy' if self.last_results and self.last_results.get('success') else 'warning',
            'last_results': self.last_results,
        }

    def get_last_results(self) -> Optional[Dict]:
        return self.last_results


# Global pipeline instance
pipeline_instance = None

def get_pipeline(jobs: Optional[int] = None) -> VerificationPipeline:
    """Get or create pipeline instance; a different job count replaces it"""
    global pipeline_instance
    if pipeline_instance is None or (jobs is not None and pipeline_instance.jobs != max(1, jobs)):
        pipeline_instance = VerificationPipeline(jobs=jobs)
    return pipeline_instance


def verify(order_range: Sequence[int], alpha_grid: Optional[Sequence] = None,
           jobs: Optional[int] = None) -> List[VerificationReport]:
    """verify([n_min, n_max], grid) through the shared pipeline"""
    n_min, n_max = order_range
    return get_pipeline(jobs).verify(n_min, n_max, alpha_grid)
