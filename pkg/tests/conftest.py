import pytest

from stepgain.lm import AnswerScore, ScriptedScorer
from stepgain.scoring import render_context


@pytest.fixture
def scripted_setup():
    """A two-step trace with hand-chosen scores for every prefix.

    Prefix contexts are exactly what render_context produces, so the same
    fixture drives library-level and service-level tests.
    """
    question = "What is 2+2?"
    steps = ["Start from 2.", "Add 2 more to get 4."]
    answer = "4"
    contexts = [render_context(question, steps[:t]) for t in range(3)]
    scores = {
        (contexts[0], answer): AnswerScore(
            token_logprobs=[-3.0], token_entropies=[2.0]
        ),
        (contexts[1], answer): AnswerScore(
            token_logprobs=[-2.0], token_entropies=[1.5]
        ),
        (contexts[2], answer): AnswerScore(
            token_logprobs=[-0.5], token_entropies=[0.5]
        ),
    }
    return {
        "question": question,
        "steps": steps,
        "answer": answer,
        "contexts": contexts,
        "scorer": ScriptedScorer(scores),
    }
