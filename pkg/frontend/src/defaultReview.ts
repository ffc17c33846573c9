// Mirrors the review bundled with the Python package so the textarea has
// something realistic to tune against on first load.
export const DEFAULT_REVIEW = `The Lighthouse at Marrow Point opens with a storm and never quite lets the weather settle. Ada Voss plays Ruth, a retired cartographer who inherits a decommissioned lighthouse from a brother she has not spoken to in twenty years. The first act follows her arrival in the village, the reading of the will, and a quarrel with the harbor council over who owns the lamp room. Director Elias Munt shoots the coastline in long unbroken takes, and the camera work is quietly stunning. The screenplay, adapted from a short novel, keeps the brother offscreen and lets his absence drive the story.

Voss gives a remarkable performance, all clenched patience and sudden warmth. Her scenes with the young ferryman, played by Tomas Reale, are the best thing in the picture. Reale is charming without ever begging for the audience's affection. The supporting cast is solid, though the council chairman is written as a cartoon villain and the actor can do little with it. A subplot about a missing fishing crew is introduced in the second act. It supplies the film's only real suspense, and the script handles it with admirable restraint. The mystery resolves in a quiet scene on the water that I found genuinely moving.

Not everything works. The middle hour is slow, and two dream sequences feel pretentious and add nothing. The music is a disappointment, a wash of mournful strings that underlines every emotion twice. A late revelation about the brother's debts is contrived, and the film strains to tie it back to the lighthouse deed. At two hours and twenty minutes the picture is overlong by at least a reel.

Still, the final stretch is superb. Munt stages the relighting of the lamp as a small civic miracle, and the editing in the last ten minutes is sharp and confident. The closing image of Ruth charting the coast by lamplight is the kind of thing you carry out of the theater. The film is uneven, but its best passages are honest and beautiful. I suspect it will reward a second viewing. Marrow Point is not a masterpiece, yet it is a sincere and handsome piece of work. Bring a coat, the village is cold and so is the color grade. I recommend it to anyone with patience for slow tides.`;
