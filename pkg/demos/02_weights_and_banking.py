"""How purple banking and indigo withdrawal play out on P6.

Staller opens on vertex 2, a problematic vertex worth 5.  One unit is banked
on the support 4, which turns purple.  Later Staller plays the leaf 5 next to
that purple support, and the support turns indigo, which banks one more unit.
Every banked unit is withdrawn by the end, so the credited values still sum to 3n.

Run: python3 demos/02_weights_and_banking.py
"""

from tdgame import OverlayState, Player, detect_problematic, new_game, path_graph, process_move, targeted_supports

g = path_graph(6)
state = OverlayState(new_game(g, Player.STALLER))


def show(s):
    return " ".join(f"{v}:{c.value}" for v, c in enumerate(s.colors()))


print("start      ", show(state), f" weight={state.weight()}")
print("problematic", {r.vertex: r.supports for r in detect_problematic(state)})
print("targeted   ", targeted_supports(state.residual_view()))
print()

total = 0
for v in [2, 1, 5, 4]:
    if state.is_game_over():
        break
    before = state
    state, e = process_move(state, v)
    total += e.adjusted_value
    print(f"{e.player.value:<9} plays {v}: raw {e.raw_value}, overlay {e.overlay_value}, "
          f"banked {e.discharge} (case {e.case}) -> credited {e.adjusted_value}")
    print("           ", show(state), f" weight={state.weight()}")

print(f"\ncredited total {total} = 3n = {3 * g.n}; final weight {state.weight()}")
