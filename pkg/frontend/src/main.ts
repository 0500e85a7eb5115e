// Bootstrap: bind the app to the static page shell.

import { App } from "./app.js";

function element<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el as T;
}

document.addEventListener("DOMContentLoaded", () => {
  const app = new App({
    banner: element("banner"),
    tabs: element("tabs"),
    queue: element("queue"),
    detail: element("detail"),
    form: element("form"),
    report: element("report"),
    sortSelect: element<HTMLSelectElement>("sort"),
  });
  void app.start();
});
