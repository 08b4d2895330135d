// Bundle parsing and validation. Mirrors docs/bundle_schema.md (version 1).

export const SUPPORTED_SCHEMA_VERSION = 1;

export interface BundleNode {
  id: number;
  tokens: string[];
  birth_rev: number;
  state: "alive" | "dead";
  death_rev: number | null;
  author: string;
  attach: number | null;
}

export interface Rect {
  node: number;
  x0: number;
  x1: number;
  row: number;
  kind: "persistent" | "deleted";
  shift: number;
}

export interface SectionBand {
  title: string;
  start: number;
  end: number;
  color_class: number;
}

export interface RevisionMeta {
  index: number;
  author: string;
  timestamp: string;
  comment: string;
}

export interface Bundle {
  schema_version: number;
  nodes: BundleNode[];
  chain: number[];
  rects: Rect[];
  edges: [number, number][];
  author_bands: number[];
  section_bands: SectionBand[];
  bars: { column_heat: number[]; revision_heat: number[] };
  revisions: RevisionMeta[];
  compact: boolean;
  revision_count: number;
  latest_len: number;
}

export class BundleFormatError extends Error {}

function need<T>(doc: Record<string, unknown>, key: string): T {
  if (!(key in doc)) {
    throw new BundleFormatError(`bundle is missing required field "${key}"`);
  }
  return doc[key] as T;
}

/** Parse and validate a bundle document; throws BundleFormatError with a
 * message suitable for the error banner. Nothing is rendered from a bundle
 * that fails here. */
export function parseBundle(text: string): Bundle {
  let doc: Record<string, unknown>;
  try {
    doc = JSON.parse(text);
  } catch (e) {
    throw new BundleFormatError(`not valid JSON: ${(e as Error).message}`);
  }
  if (typeof doc !== "object" || doc === null) {
    throw new BundleFormatError("bundle must be a JSON object");
  }
  const version = need<number>(doc, "schema_version");
  if (version !== SUPPORTED_SCHEMA_VERSION) {
    throw new BundleFormatError(
      `unsupported schema_version ${version} (this viewer reads version ${SUPPORTED_SCHEMA_VERSION})`,
    );
  }
  const bundle: Bundle = {
    schema_version: version,
    nodes: need(doc, "nodes"),
    chain: need(doc, "chain"),
    rects: need(doc, "rects"),
    edges: need(doc, "edges"),
    author_bands: need(doc, "author_bands"),
    section_bands: need(doc, "section_bands"),
    bars: need(doc, "bars"),
    revisions: need(doc, "revisions"),
    compact: need(doc, "compact"),
    revision_count: need(doc, "revision_count"),
    latest_len: need(doc, "latest_len"),
  };
  const ids = new Set(bundle.nodes.map((n) => n.id));
  for (const rect of bundle.rects) {
    if (!ids.has(rect.node)) {
      throw new BundleFormatError(`rect refers to unknown node ${rect.node}`);
    }
  }
  for (const id of bundle.chain) {
    if (!ids.has(id)) {
      throw new BundleFormatError(`chain refers to unknown node ${id}`);
    }
  }
  return bundle;
}

export function nodeById(bundle: Bundle, id: number): BundleNode {
  const node = bundle.nodes.find((n) => n.id === id);
  if (node === undefined) {
    throw new BundleFormatError(`no node with id ${id}`);
  }
  return node;
}
