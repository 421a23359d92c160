"""
Algebra Performance Benchmarking
================================

Timings for the exact kernels of the engine: block construction, harmonic
projection, homotopy, transferred operations and full identity suites.

Targets are per operation, in milliseconds, on a warm block cache.
"""

import json
import logging
import os
import statistics
import sys
import time
from datetime import datetime
from typing import Callable, Dict

# Setup logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(__file__))))

from algebra.cecomplex import (
    ComplexBlock, bigraded_homology, clear_block_cache, homotopy_h, project_p,
)
from algebra.exterior import parse_element
from algebra.identities import check_stasheff
from algebra.transfer import HClass, TransferConfig, m3, mn
from shared.app_utils import get_base_dir


def get_benchmark_dir() -> str:
    return os.environ.get('CINFTY_BENCHMARK_DIR', os.path.join(get_base_dir(), '.benchmarks'))


class AlgebraBenchmark:
    """Algebra performance benchmarking suite"""

    def __init__(self, num_iterations: int = 20):
        self.num_iterations = num_iterations
        self.results = {}

    def setup(self):
        """Warm the block cache for dim V = 3"""
        logger.info("Warming block cache for dim V = 3...")
        clear_block_cache()
        bigraded_homology(3)
        self.e = {i: HClass.generator(i, 3) for i in (1, 2, 3)}
        self.config = TransferConfig(3, 'a')

    def cleanup(self):
        clear_block_cache()

    def benchmark_operation(self, operation_name: str, operation_func: Callable,
                            target_ms: float, iterations: int = None) -> Dict:
        """Benchmark a single operation

        Args:
            operation_name: Name of operation for logging
            operation_func: Zero-argument callable to time
            target_ms: Mean time that counts as meeting the target
            iterations: Override of the suite iteration count

        Returns:
            Dictionary with timing statistics
        """
        logger.info(f"Benchmarking: {operation_name}")
        iterations = iterations or self.num_iterations
        times = []

        for _ in range(iterations):
            start = time.perf_counter()
            operation_func()
            times.append((time.perf_counter() - start) * 1000)

        ordered = sorted(times)
        stats = {
            'operation': operation_name,
            'iterations': iterations,
            'min_ms': ordered[0],
            'max_ms': ordered[-1],
            'mean_ms': statistics.mean(times),
            'median_ms': statistics.median(times),
            'stdev_ms': statistics.stdev(times) if len(times) > 1 else 0,
            'p95_ms': ordered[int(len(ordered) * 0.95) - 1] if len(ordered) > 1 else ordered[0],
            'target_ms': target_ms,
        }
        stats['target_met'] = stats['mean_ms'] < target_ms
        logger.info(f"  Mean: {stats['mean_ms']:.2f}ms, Median: {stats['median_ms']:.2f}ms, "
                    f"P95: {stats['p95_ms']:.2f}ms")
        return stats

    def test_block_construction(self) -> Dict:
        """Benchmark: build the largest dim V = 3 block from scratch"""
        def operation():
            block = ComplexBlock(3, (2, 2, 2))
            for p in block.degrees:
                block.harmonic_vectors(p)

        return self.benchmark_operation('block_construction_3_222', operation, 2000, iterations=3)

    def test_projection(self) -> Dict:
        """Benchmark: harmonic projection on a warm cache"""
        x = parse_element("e2^e{1,3}", 3)
        return self.benchmark_operation('project_p', lambda: project_p(x, 3), 5)

    def test_homotopy(self) -> Dict:
        """Benchmark: homotopy on a warm cache"""
        x = parse_element("e1^e2^e3", 3)
        return self.benchmark_operation('homotopy_h', lambda: homotopy_h(x, 3), 5)

    def test_m3(self) -> Dict:
        """Benchmark: dedicated m3 on degree-one classes"""
        e = self.e
        return self.benchmark_operation('m3', lambda: m3(e[1], e[2], e[3]), 20)

    def test_m5(self) -> Dict:
        """Benchmark: recursive m5 on degree-one classes"""
        e = self.e
        args = [e[1], e[2], e[3], e[1], e[2]]
        return self.benchmark_operation('m5', lambda: mn(5, args, self.config), 500)

    def test_stasheff_suite(self) -> Dict:
        """Benchmark: exhaustive SI(3), SI(4) at dim V = 3"""
        return self.benchmark_operation(
            'stasheff_up_to_4', lambda: check_stasheff(4, self.config), 30000, iterations=1
        )

    def run_all(self) -> Dict:
        """Run all algebra benchmarks"""
        logger.info("=" * 80)
        logger.info("ALGEBRA PERFORMANCE BENCHMARKS")
        logger.info("=" * 80)

        try:
            self.setup()

            self.results = {
                'timestamp': datetime.now().isoformat(),
                'iterations': self.num_iterations,
                'benchmarks': []
            }

            benchmarks = [
                self.test_projection,
                self.test_homotopy,
                self.test_m3,
                self.test_m5,
                self.test_stasheff_suite,
                self.test_block_construction,
            ]

            for benchmark in benchmarks:
                self.results['benchmarks'].append(benchmark())

            self._calculate_summary()
            return self.results

        finally:
            self.cleanup()

    def _calculate_summary(self):
        benchmarks = self.results['benchmarks']
        passed = sum(1 for b in benchmarks if b['target_met'])
        self.results['summary'] = {
            'total_benchmarks': len(benchmarks),
            'passed_target': passed,
            'failed_target': len(benchmarks) - passed,
        }

    def print_summary(self):
        """Print benchmark summary"""
        print("\n" + "=" * 80)
        print("ALGEBRA BENCHMARK SUMMARY")
        print("=" * 80)
        print(f"{'Operation':<40} {'Mean':<10} {'P95':<10} {'Status':<10}")
        print("-" * 80)

        for bench in self.results['benchmarks']:
            status = "PASS" if bench['target_met'] else "FAIL"
            print(f"{bench['operation']:<40} {bench['mean_ms']:<10.2f} "
                  f"{bench['p95_ms']:<10.2f} {status:<10}")

        print("-" * 80 + "\n")


def run_benchmarks():
    """Run algebra benchmarks"""
    benchmark = AlgebraBenchmark(num_iterations=20)
    results = benchmark.run_all()
    benchmark.print_summary()

    output_file = os.path.join(get_benchmark_dir(), 'algebra_benchmark.json')
    os.makedirs(os.path.dirname(output_file), exist_ok=True)
    with open(output_file, 'w') as f:
        json.dump(results, f, indent=2)

    logger.info(f"Results saved to {output_file}")
    return results


if __name__ == '__main__':
    run_benchmarks()
