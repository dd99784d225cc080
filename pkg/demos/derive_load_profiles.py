"""
Load profiles from a harmonized household
=========================================

Harmonizes one synthetic dataset with the library API (no CLI), then
derives hour-of-day, day-of-week, and day-of-month profiles for a
household's aggregate meter and plots them.

    python3 demos/derive_load_profiles.py
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from elkg.fixtures import write_raw_corpus
from elkg.harmonize import load_descriptor_dir, parse_dataset
from elkg.profiles import (ProfileAccumulator, avg_daily_consumption,
                           consumption_stats)

out_dir = Path(__file__).resolve().parent / "output" / "profiles"
out_dir.mkdir(parents=True, exist_ok=True)

corpus = write_raw_corpus(out_dir)
descriptors = load_descriptor_dir(out_dir / "descriptors")
alpha = next(d for d in descriptors if d.dataset == "alpha")

result = parse_dataset(alpha, out_dir / "raw" / "alpha")
house = next(r for r in result.records if r.household == "house_1")
series = house.aggregate
print(f"{house.dataset}/{house.household}: {len(series.timestamps)} aggregate "
      f"samples at {house.sampling_period_s} s, timezone {house.timezone}")

# buckets are local-time; the accumulator handles the DST day lengths
acc = ProfileAccumulator(house.timezone, house.sampling_period_s)
acc.add_series(series)

daily = acc.profile("daily")
weekly = acc.profile("weekly")
monthly = acc.profile("monthly")
avg = avg_daily_consumption(series, house.timezone, house.sampling_period_s)
print(f"average daily consumption: {avg:.3f} kWh")

# usage events only make sense per appliance, so take a sub-meter
fridge = house.appliances["refrigerator"]
stats = consumption_stats(fridge, house.timezone, is_aggregate=False,
                          sampling_period_s=house.sampling_period_s)
print(f"refrigerator: {stats.event_count} usage events, "
      f"avg event energy {stats.avg_event_kwh:.4f} kWh")

fig, axes = plt.subplots(1, 3, figsize=(13, 3.5))
for ax, profile, xlabel in (
    (axes[0], daily, "hour of day"),
    (axes[1], weekly, "day of week"),
    (axes[2], monthly, "day of month"),
):
    ax.bar(range(len(profile.buckets)), profile.buckets)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("kWh per bucket")
    ax.set_title(profile.kind)
fig.tight_layout()
png = out_dir / "profiles.png"
fig.savefig(png, dpi=120)
print(f"wrote {png}")
