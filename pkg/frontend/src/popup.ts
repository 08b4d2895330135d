// Popup content for a selected node: its exact payload, what happened to it
// and when, and who wrote it.

import { nodeById, type Bundle } from "./model.js";

export interface PopupContent {
  payload: string;
  operation: "added" | "deleted";
  birthRev: number;
  deathRev: number | null;
  author: string;
  lines: string[];
}

export function popupContent(bundle: Bundle, nodeId: number): PopupContent {
  const node = nodeById(bundle, nodeId);
  const payload = node.tokens.join(" ");
  const dead = node.state === "dead";
  const lines: string[] = [];
  if (dead && node.death_rev !== null) {
    lines.push(`deleted at revision ${node.death_rev}`);
  }
  lines.push(`added at revision ${node.birth_rev}`);
  lines.push(`author: ${node.author}`);
  return {
    payload,
    operation: dead ? "deleted" : "added",
    birthRev: node.birth_rev,
    deathRev: dead ? node.death_rev : null,
    author: node.author,
    lines,
  };
}
