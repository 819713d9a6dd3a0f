"""Text rendering and a canonical sort key for carrier elements."""


def render(x) -> str:
    custom = getattr(x, "render", None)
    if custom is not None:
        return custom()
    if isinstance(x, tuple):
        if not x:
            return "*"
        return "(" + ",".join(render(part) for part in x) + ")"
    return str(x)


def sort_key(x):
    # total order across the element kinds that occur in carriers
    custom = getattr(x, "sort_key", None)
    if custom is not None:
        return custom()
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, len(x), tuple(sort_key(part) for part in x))
    return (9, repr(x))
