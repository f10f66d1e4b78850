/**
 * Pure HTML renderers for the workbench.  Everything here is a string
 * builder over the store state; event wiring happens in main.ts.
 */

import { cellKey, type WorkbenchState } from "./state.js";
import type { DecisionRowWire, DecisionTableWire, MeasureId } from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderGrid(state: WorkbenchState): string {
  const doc = state.doc;
  if (!doc) {
    return `<p class="empty">Load an assessment (CSV or JSON) to begin.</p>`;
  }
  const header = doc.attributes
    .map((attribute) => {
      const off = state.disabled.has(attribute.id);
      const label = attribute.label
        ? ` title="${escapeHtml(attribute.label)}"`
        : "";
      return (
        `<th class="${off ? "off" : "on"}"${label}>` +
        `<label><input type="checkbox" data-toggle="${escapeHtml(attribute.id)}"` +
        `${off ? "" : " checked"}> ${escapeHtml(attribute.id)}</label></th>`
      );
    })
    .join("");
  const body = doc.alternatives
    .map((alternative, i) => {
      const cells = doc.grades[i]
        .map((grade, j) => {
          const attribute = doc.attributes[j].id;
          const error = state.cellErrors[cellKey(alternative, attribute)];
          const classes = [
            "grade-cell",
            state.disabled.has(attribute) ? "off" : "",
            error ? "invalid" : "",
          ]
            .filter(Boolean)
            .join(" ");
          const title = error ? ` title="${escapeHtml(error)}"` : "";
          return (
            `<td class="${classes}"${title}>` +
            `<input data-alt="${escapeHtml(alternative)}" ` +
            `data-attr="${escapeHtml(attribute)}" value="${escapeHtml(grade)}"></td>`
          );
        })
        .join("");
      return `<tr><th>${escapeHtml(alternative)}</th>${cells}</tr>`;
    })
    .join("");
  return (
    `<table class="grid"><thead><tr><th></th>${header}</tr></thead>` +
    `<tbody>${body}</tbody></table>`
  );
}

function measureDecimal(row: DecisionRowWire, measure: DecisionTableWire["measure"]): string {
  if (measure === "G1") return row.gamma1_decimal;
  if (measure === "G2") return String(row.gamma2);
  return row.gamma3_decimal;
}

function measureExact(row: DecisionRowWire, measure: DecisionTableWire["measure"]): string {
  if (measure === "G1") return row.gamma1;
  if (measure === "G2") return String(row.gamma2);
  return row.gamma3;
}

function deltaBadge(delta: number | undefined): string {
  if (!delta) return `<span class="delta none">&middot;</span>`;
  const arrow = delta > 0 ? "&uarr;" : "&darr;";
  const direction = delta > 0 ? "up" : "down";
  return `<span class="delta ${direction}">${arrow}${Math.abs(delta)}</span>`;
}

/**
 * Ranking panel: rows in server order, tie groups rendered as bracketed
 * clusters, a bar per row scaled against the strongest score, and a rank
 * movement badge per alternative.
 */
export function renderRanking(state: WorkbenchState): string {
  const table = state.table;
  if (!table) {
    return `<p class="empty">No ranking yet.</p>`;
  }
  const decimals = table.rows.map((row) =>
    Math.abs(parseFloat(measureDecimal(row, table.measure))),
  );
  const peak = Math.max(...decimals, 0);

  const groups: DecisionRowWire[][] = [];
  for (const row of table.rows) {
    const last = groups[groups.length - 1];
    if (last && last[0].tie_group === row.tie_group) {
      last.push(row);
    } else {
      groups.push([row]);
    }
  }

  const items = groups
    .map((group) => {
      const rows = group
        .map((row, indexInGroup) => {
          const width = peak
            ? Math.round(
                (Math.abs(parseFloat(measureDecimal(row, table.measure))) / peak) * 100,
              )
            : 0;
          return (
            `<div class="ranking-row${indexInGroup > 0 ? " tied" : ""}" ` +
            `data-rank="${row.rank}">` +
            `<span class="rank">${row.rank}</span>` +
            `<span class="alt">${escapeHtml(row.alternative)}</span>` +
            deltaBadge(state.deltas[row.alternative]) +
            `<span class="bar" style="width:${width}%"></span>` +
            `<span class="value" title="${escapeHtml(measureExact(row, table.measure))}">` +
            `${escapeHtml(measureDecimal(row, table.measure))}</span>` +
            `</div>`
          );
        })
        .join("");
      const tied = group.length > 1 ? ` tie-cluster" data-tie-size="${group.length}` : "";
      return `<div class="rank-group${tied}">${rows}</div>`;
    })
    .join("");

  return (
    `<div class="ranking" data-measure="${table.measure}">` +
    `${items}<p class="digest">source ${escapeHtml(table.source_digest)}</p></div>`
  );
}

export function renderMeasurePicker(current: MeasureId): string {
  const options = (["g1", "g2", "g3"] as MeasureId[])
    .map(
      (m) =>
        `<option value="${m}"${m === current ? " selected" : ""}>${m.toUpperCase()}</option>`,
    )
    .join("");
  return `<select id="measure">${options}</select>`;
}

export function renderNotice(state: WorkbenchState): string {
  if (!state.notice) return "";
  return `<p class="notice">${escapeHtml(state.notice)}</p>`;
}
