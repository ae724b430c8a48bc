"""
Acceptance-suite runner and logging setup
"""

import os
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from datetime import date, datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from .claims import (
    ClaimContext, ClaimReport, VerifyConfig,
    FAIL, SKIPPED_BUDGET,
    run_claim, select_claims,
)
from .config import MainConfig


def setup_logging(log_dir: str, save_log: bool, verbose: bool = False):
    """Set up logging with appropriate verbosity level"""
    level = logging.DEBUG if verbose else logging.INFO
    handlers = [logging.StreamHandler()]
    log_file_path = None

    if save_log:
        os.makedirs(log_dir, exist_ok=True)
        log_file_path = os.path.join(log_dir, f"run-{date.today().isoformat()}-{datetime.now().strftime('%H')}.txt")
        file_handler = logging.FileHandler(log_file_path)
        file_handler.setFormatter(logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s'))
        handlers.append(file_handler)

    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True
    )

    # Suppress INFO/WARNING logs from noisy libraries
    logging.getLogger('networkx').setLevel(logging.ERROR)
    logging.getLogger('matplotlib').setLevel(logging.ERROR)

    return logging.getLogger(__name__), log_file_path


def load_config(config_path: Optional[str]) -> MainConfig:
    """Read the YAML config; a missing file means all defaults."""
    logger = logging.getLogger(__name__)
    if config_path and Path(config_path).exists():
        return MainConfig.from_yaml(config_path)
    if config_path:
        logger.info(f"Config file {config_path} not found, using defaults")
    return MainConfig()


def exit_code(reports: List[ClaimReport]) -> int:
    """1 if any claim failed, else 2 if any ran out of budget, else 0. Informational claims never count."""
    statuses = {report.status for report in reports}
    if FAIL in statuses:
        return 1
    if SKIPPED_BUDGET in statuses:
        return 2
    return 0


def run_claims(ctx: ClaimContext, verify_config: VerifyConfig) -> List[ClaimReport]:
    """Run the selected claims concurrently; reports come back ordered by claim id."""
    logger = logging.getLogger(__name__)
    claims = select_claims(verify_config.claims)
    logger.info(f"Running {len(claims)} claims with {verify_config.workers} workers")

    reports: List[Optional[ClaimReport]] = [None] * len(claims)
    with ThreadPoolExecutor(max_workers=max(1, verify_config.workers)) as executor:
        future_to_index = {
            executor.submit(run_claim, claim, ctx): i
            for i, claim in enumerate(claims)
        }
        for future in as_completed(future_to_index):
            index = future_to_index[future]
            reports[index] = future.result()

    done = sorted((r for r in reports if r is not None), key=lambda r: r.claim_id)
    passed = sum(1 for r in done if r.status == "pass")
    logger.info(f"Claims finished: {passed}/{len(done)} passed")
    return done


def run_verification(config_path: Optional[str] = None, budget: Optional[int] = None,
                     claims: Optional[List[str]] = None,
                     verbose: bool = False) -> Tuple[List[ClaimReport], int]:
    """Load config, run the acceptance suite and return (reports, exit code)."""
    config = load_config(config_path)
    overrides: Dict[str, Any] = {}
    if budget is not None:
        overrides["budget"] = budget
    if claims:
        overrides["claims"] = claims
    if overrides:
        verify = config.verify.model_dump()
        verify.update(overrides)
        config = config.model_copy(update={"verify": type(config.verify)(**verify)})
    pipeline = config.get_pipeline_configs()

    logger, log_file_path = setup_logging(
        log_dir=pipeline["log_dir"],
        save_log=pipeline["save_log"],
        verbose=verbose or pipeline["verbose"]
    )
    try:
        ctx = ClaimContext(
            solver=pipeline["verify_solver"],
            complexes=pipeline["complexes"],
            seed=pipeline["verify"].seed or pipeline["seed"]
        )
        reports = run_claims(ctx, pipeline["verify"])
        code = exit_code(reports)
        logger.info(f"Verification finished with exit code {code}")
        if log_file_path:
            logger.info(f"Log written to {log_file_path}")
        for handler in logging.getLogger().handlers:
            handler.flush()
        return reports, code
    except Exception as e:
        logger.error(f"Verification failed with error: {e}", exc_info=True)
        raise
