# flag -> config key groups shared by several subcommands

EPISODE_FLAGS = {
    "ways": "ways",
    "shots": "shots",
    "queries": "queries",
    "seed": "seed",
}

TRAINING_FLAGS = {
    "schedule": "schedule",
    "measure": "measure",
    "lambda": "phase_split",
    "tasks": "tasks",
    "batch-size": "batch_size",
    "outer-lr": "outer_lr",
    "inner-lr": "inner_lr",
    "probability": "probability",
    "meta-mode": "meta_mode",
    "first-order": "first_order",
    "zero-head": "zero_head",
    "hidden": "hidden",
    "threads": "threads",
}
