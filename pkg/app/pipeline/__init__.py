# Verification pipeline
from .verification_pipeline import VerificationPipeline, get_pipeline, verify

__all__ = ['VerificationPipeline', 'get_pipeline', 'verify']
