from expert_training.errors import ConfigurationError
from expert_training.models.data_dictionary import DataDictionary
from expert_training.models.episode import Episode, random_episode, semantic_episode
from expert_training.models.hardness.weights import Phase
from expert_training.models.rng import derive_task_rng
from expert_training.models.task_kind import TaskKind
from expert_training.models.taxonomy import Taxonomy
from expert_training.models.training.plan import Schedule, TrainPlan


def phase_of(task_index: int, plan: TrainPlan) -> Phase:
    if not 0 <= task_index < plan.tasks:
        raise IndexError(f"task index {task_index} outside 0..{plan.tasks - 1}")
    return Phase.PRIMARY if task_index < plan.primary_tasks else Phase.ADVANCED


def weighting_phase(schedule: Schedule, phase: Phase) -> Phase | None:
    """Branch of the hardness transform a schedule uses; None means equal weights."""
    if schedule is Schedule.EXPERT:
        return phase
    if schedule is Schedule.REVERSED:
        return phase.swapped()
    return None


def target_kind(phase: Phase) -> TaskKind:
    return TaskKind.EASY if phase is Phase.PRIMARY else TaskKind.HARD


def select_training_episode(
    task_index: int,
    plan: TrainPlan,
    taxonomy: Taxonomy | None,
    data: DataDictionary,
) -> Episode:
    phase = phase_of(task_index, plan)
    rng = derive_task_rng(plan.seed, task_index)

    if not plan.schedule.needs_taxonomy:
        return random_episode(
            data, plan.ways, plan.shots, plan.queries, rng, task_index
        )

    if taxonomy is None:
        raise ConfigurationError(f"schedule {plan.schedule} needs a taxonomy")

    kind = target_kind(phase)
    if plan.schedule is Schedule.PROBABILISTIC and rng.random() >= plan.probability:
        kind = kind.opposite()

    return semantic_episode(
        data, taxonomy, kind, plan.ways, plan.shots, plan.queries, rng, task_index
    )
