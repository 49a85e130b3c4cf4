import argparse
import json
import logging
import os
import sys
from typing import Callable, Dict, List, Optional, Sequence

from src.managers.reference_examples import run_reference_examples
from src.managers.settings_store import DEFAULT_CONFIG, SettingsStore
from src.managers.sweep import dump_records, run_sweep
from src.models.errors import ConfigError, LexsegError, ValidationError
from src.models.monomial import Monomial, PolynomialRing
from src.models.orders import MonomialOrder
from src.models.settings import Settings
from src.models.tableau import Tableau
from src.models.toric import TermOrder
from src.operation.exchange import check_l_exchange, check_sigma_exchange
from src.operation.lemmas import run_lemma_suite
from src.operation.lexsegments import (
    build_lexsegment,
    classify,
    final_lexsegment,
    initial_lexsegment,
)
from src.operation.quotients import (
    has_linear_quotients,
    prescribed_power_generators,
    revalidate_certificate,
)
from src.operation.rees import is_reduced, koszul_certificate, rees_gb, verify_groebner
from src.operation.tableaux import is_standard, standard_tableau_from_support
from src.parsers.vectors import parse_monomial, parse_rows, parse_support
from src.utils.log import mark, setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2


class Output:
    '''
    Вывод результата: JSON одной строкой или человекочитаемый текст в stdout.
    '''
    def __init__(self, stream, as_json: bool):
        self.stream = stream
        self.as_json = as_json
        self.color = hasattr(stream, "isatty") and stream.isatty()

    def emit(self, data: Dict, lines: Sequence[str]):
        if self.as_json:
            self.stream.write(json.dumps(data, sort_keys=True, ensure_ascii=False) + "\n")
        else:
            for line in lines:
                self.stream.write(line + "\n")

    def mark(self, ok: bool) -> str:
        return mark(ok, self.color)


# --- разбор аргументов ---

def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help=f"Файл настроек (по умолчанию {DEFAULT_CONFIG}, если существует)")
    common.add_argument("-v", "--verbose", action="count", default=0, help="Подробнее (-vv для отладки)")
    common.add_argument("-q", "--quiet", action="count", default=0, help="Только ошибки")
    common.add_argument("--seed", type=int, help="Зерно для случайных проверок")
    common.add_argument("--json", action="store_true", help="Вывод в формате JSON")
    return common


def _add_ideal(parser: argparse.ArgumentParser, required: bool = True):
    parser.add_argument("--n", type=int, required=True, help="Число переменных")
    parser.add_argument("--d", type=int, required=True, help="Степень")
    parser.add_argument("--u", required=required, help="Верхний конец, например 1,0,1,1")
    parser.add_argument("--v", required=required, help="Нижний конец")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="lexseg", description="Лексегментные идеалы: классификация, "
                                     "стандартные таблицы, алгебры Риса и линейные частные")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="Классификация L(u,v)")
    _add_ideal(p)
    p.add_argument("--iterations", "--shadow-iters", dest="iterations", type=int,
                   help="Число проверяемых теней (по умолчанию n·d)")

    p = sub.add_parser("tableau", parents=[common], help="Стандартная таблица по носителю")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--support", help="Мультимножество индексов, например 1,1,2,2")
    group.add_argument("--check", help="Проверить таблицу, строки через ';', например 1,3;2,2")
    p.add_argument("--N", type=int, help="Число строк")
    p.add_argument("--d", type=int, help="Длина строки")
    p.add_argument("--n", type=int, help="Число переменных (по умолчанию наибольший индекс)")

    p = sub.add_parser("power-quotients", parents=[common], help="Линейные частные I^N")
    _add_ideal(p)
    p.add_argument("--N", type=int, required=True, help="Степень идеала")

    p = sub.add_parser("rees-gb", parents=[common], help="Базис Грёбнера идеала Риса")
    _add_ideal(p)
    p.add_argument("--sigma", default="revlex-dec", choices=["revlex-dec", "lex"])
    p.add_argument("--verify", action="store_true", help="Проверить критерий Бухбергера")
    p.add_argument("--check-exchange", action="store_true", help="Проверить σ-обмен для G(I)")

    p = sub.add_parser("exchange", parents=[common], help="Свойства ℓ- и σ-обмена")
    _add_ideal(p, required=False)
    p.add_argument("--final", help="B = L^f(V)")
    p.add_argument("--initial", help="B = L^i(V)")
    p.add_argument("--mode", default="sigma", choices=["l", "sigma"])
    p.add_argument("--bound", type=int, help="Наибольшая T-степень")
    p.add_argument("--sigma", default="revlex-dec", choices=["revlex-dec", "lex"])
    p.add_argument("--term-order", default="lex", choices=["lex", "degrevlex"])

    p = sub.add_parser("sweep", parents=[common], help="Сверка теорем на всех парах (u, v)")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--N-max", type=int, help="Наибольшая степень идеала")
    p.add_argument("--workers", type=int, help="Число процессов")
    p.add_argument("--output", help="Сохранить записи в JSON-файл")
    p.add_argument("--no-rees", action="store_true", help="Не строить базисы алгебр Риса")

    sub.add_parser("paper-examples", parents=[common], help="Эталонные примеры")

    p = sub.add_parser("lemmas", parents=[common], help="Случайные проверки лемм о стандартных произведениях")
    p.add_argument("--cases", type=int, help="Применимых случаев на лемму")
    return parser


# --- настройки ---

def load_settings(args) -> Settings:
    """
    :raises ConfigError: Если явно указанный файл настроек не существует.
    """
    if args.config and not os.path.exists(args.config):
        raise ConfigError(f"Файл настроек {args.config} не найден")
    store = SettingsStore(args.config or DEFAULT_CONFIG)
    return store.get_settings().override(
        seed=args.seed,
        workers=getattr(args, "workers", None),
        power_max=getattr(args, "N_max", None),
        exchange_bound=getattr(args, "bound", None),
        lemma_cases=getattr(args, "cases", None),
    )


def _ring(n: int) -> PolynomialRing:
    return PolynomialRing(n)


def _ideal(args):
    ring = _ring(args.n)
    return build_lexsegment(parse_monomial(ring, args.u, args.d), parse_monomial(ring, args.v, args.d))


# --- подкоманды ---

def cmd_classify(args, settings: Settings, out: Output) -> int:
    ideal = _ideal(args)
    cls = classify(ideal, args.iterations if args.iterations is not None else settings.shadow_iterations)
    data = {
        "u": ideal.u.text(), "v": ideal.v.text(),
        "verdict": cls.verdict.value, "label": cls.label(),
        "completely": cls.completely, "iterations": cls.iterations,
        "complete_up_to": cls.complete_up_to, "generators": len(ideal),
        "a": cls.a, "l": cls.l, "w": cls.w.text() if cls.w else None,
    }
    out.emit(data, [
        f"L({ideal.u.pretty()}, {ideal.v.pretty()}): {len(ideal)} образующих",
        f"вполне лексегментный: {cls.completely} (теней проверено {cls.complete_up_to} из {cls.iterations})",
        f"вердикт: {cls.label()}",
    ])
    return EXIT_OK


def cmd_tableau(args, settings: Settings, out: Output) -> int:
    if args.check is not None:
        rows = parse_rows(args.check)
        n = args.n if args.n is not None else max(max(r) for r in rows)
        tableau = Tableau(tuple(rows), n)
        ok = is_standard(tableau)
        out.emit({"rows": [list(r) for r in tableau.rows], "standard": ok},
                 [tableau.render(), f"стандартна: {out.mark(ok)}"])
        return EXIT_OK
    if args.N is None or args.d is None:
        raise ValidationError("Для --support нужны --N и --d")
    support = parse_support(args.support)
    tableau = standard_tableau_from_support(support, args.N, args.d, args.n)
    ok = is_standard(tableau)
    ring = PolynomialRing(tableau.n)
    out.emit({"rows": [list(r) for r in tableau.rows], "standard": ok,
              "monomials": [m.text() for m in tableau.row_monomials(ring)]},
             [tableau.render(),
              " * ".join(m.pretty() for m in tableau.row_monomials(ring)),
              f"стандартна: {out.mark(ok)}"])
    return EXIT_OK if ok else EXIT_REFUTED


def cmd_power_quotients(args, settings: Settings, out: Output) -> int:
    ideal = _ideal(args)
    og = prescribed_power_generators(ideal, args.N, settings.shadow_iterations)
    cert = has_linear_quotients(og)
    revalidated = revalidate_certificate(og, cert)
    ok = cert.ok and revalidated
    data = {
        "u": ideal.u.text(), "v": ideal.v.text(), "N": args.N,
        "order": og.order.name,
        "generators": [g.text() for g in og.gens],
        "certificate": cert.to_json(),
        "witnesses": [w.to_json() for w in cert.witnesses],
        "revalidated": revalidated,
    }
    lines = [f"G(I^{args.N}): {len(og)} образующих в порядке {og.order.name}",
             f"линейные частные: {out.mark(cert.ok)}, перепроверка: {out.mark(revalidated)}"]
    if cert.failure:
        lines.append(f"нет свидетеля для пары i={cert.failure[0]}, j={cert.failure[1]}")
    out.emit(data, lines)
    return EXIT_OK if ok else EXIT_REFUTED


def cmd_rees_gb(args, settings: Settings, out: Output) -> int:
    ideal = _ideal(args)
    sigma = MonomialOrder.from_name(args.sigma)
    basis = rees_gb(ideal, sigma, args.check_exchange, settings.exchange_bound)
    binomials = basis.binomials
    quadratic = koszul_certificate(binomials)
    verified = verify_groebner(binomials, basis.order, settings.reduction_step_budget) if args.verify else None
    data = {
        "sigma": sigma.name,
        "binomials": [b.to_json() for b in binomials],
        "fiber": len(basis.fiber), "linear": len(basis.linear),
        "quadratic": quadratic, "reduced": is_reduced(binomials, basis.order),
        "verified": verified, "warning": basis.warning,
    }
    lines = [repr(b) for b in binomials]
    lines.append(f"{len(basis.fiber)} слоевых, {len(basis.linear)} линейных; квадратичный: {out.mark(quadratic)}")
    if verified is not None:
        lines.append(f"критерий Бухбергера: {out.mark(verified)}")
    if basis.warning:
        lines.append("предупреждение: σ-обмен не выполнен")
    out.emit(data, lines)
    return EXIT_REFUTED if verified is False else EXIT_OK


def _exchange_generators(args) -> List[Monomial]:
    ring = _ring(args.n)
    chosen = [x for x in (args.final, args.initial, args.u) if x is not None]
    if len(chosen) != 1:
        raise ValidationError("Укажите ровно одно из: --final, --initial или пару --u/--v")
    if args.final is not None:
        return list(final_lexsegment(parse_monomial(ring, args.final, args.d)).generators)
    if args.initial is not None:
        return list(initial_lexsegment(parse_monomial(ring, args.initial, args.d)).generators)
    if args.v is None:
        raise ValidationError("Вместе с --u требуется --v")
    return list(_ideal(args).generators)


def cmd_exchange(args, settings: Settings, out: Output) -> int:
    gens = _exchange_generators(args)
    term_order = TermOrder.from_name(args.term_order)
    if args.mode == "l":
        report = check_l_exchange(gens, settings.exchange_bound, term_order)
    else:
        sigma = MonomialOrder.from_name(args.sigma)
        report = check_sigma_exchange(gens, sigma, settings.exchange_bound, term_order)
    lines = [f"|B| = {len(gens)}, пар проверено: {report.pairs_checked}",
             f"{args.mode}-обмен: {out.mark(report.satisfied)}"]
    if report.counterexample:
        ce = report.counterexample
        lines.append("контрпример: " + "*".join(f"T[{m.pretty()}]" for m in ce.u_factors)
                     + " , " + "*".join(f"T[{m.pretty()}]" for m in ce.v_factors))
    out.emit(report.to_json(), lines)
    return EXIT_OK if report.satisfied else EXIT_REFUTED


def cmd_sweep(args, settings: Settings, out: Output) -> int:
    records = run_sweep(args.n_max, args.d_max, settings.power_max, settings, not args.no_rees)
    if args.output:
        dump_records(records, args.output)
    failed = [r for r in records if r.failed]
    if out.as_json:
        for r in records:
            out.stream.write(r.dumps() + "\n")
    else:
        for r in records:
            status = "skip" if r.consistent is None and r.rees is None else out.mark(not r.failed)
            out.stream.write(f"n={r.n} d={r.d} u={r.u} v={r.v}: {r.label} {status}\n")
        out.stream.write(f"всего {len(records)}, расхождений {len(failed)}\n")
    return EXIT_REFUTED if failed else EXIT_OK


def cmd_examples(args, settings: Settings, out: Output) -> int:
    results = run_reference_examples()
    out.emit({"examples": [r.to_json() for r in results]},
             [f"{r.name}: {r.actual} {out.mark(r.ok)}" for r in results])
    return EXIT_OK if all(r.ok for r in results) else EXIT_REFUTED


def cmd_lemmas(args, settings: Settings, out: Output) -> int:
    results = run_lemma_suite(settings.lemma_cases, settings.seed)
    data = {"lemmas": [{"lemma": r.lemma, "applicable": r.applicable,
                        "violations": r.violations, "attempts": r.attempts} for r in results]}
    out.emit(data, [f"{r.lemma}: {r.applicable} случаев, нарушений {len(r.violations)} {out.mark(r.ok)}"
                    for r in results])
    return EXIT_OK if all(r.ok for r in results) else EXIT_REFUTED


COMMANDS: Dict[str, Callable] = {
    "classify": cmd_classify,
    "tableau": cmd_tableau,
    "power-quotients": cmd_power_quotients,
    "rees-gb": cmd_rees_gb,
    "exchange": cmd_exchange,
    "sweep": cmd_sweep,
    "paper-examples": cmd_examples,
    "lemmas": cmd_lemmas,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    """
    Точка входа командной строки.

    :return: 0 при успехе, 1 если найдено опровержение (сертификат или проверка не прошли),
        2 при ошибке использования.
    """
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    setup_logging(args.verbose - args.quiet)
    try:
        settings = load_settings(args)
        return COMMANDS[args.command](args, settings, Output(stdout, args.json))
    except LexsegError as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except OSError as e:
        logger.error("Ошибка ввода-вывода: %s", e)
        return EXIT_USAGE
